#pragma once

// Dickson brackets [i,j], the invariants I_0, I_1 and nu, and the bracket
// expressions F_{m,p}.

#include <string>
#include <vector>

#include "fpt/budget.hpp"
#include "fpt/error.hpp"
#include "fpt/fmp.hpp"
#include "fpt/gf.hpp"

namespace fpt {

/// [i,j](x,y) = x^(p^i) y^(p^j) - x^(p^j) y^(p^i).
inline FieldElem bracket(u64 i, u64 j, const FieldElem& x, const FieldElem& y) {
  require(x.field() == y.field(), Errc::FieldMismatch, "bracket arguments in different fields");
  return x.frobenius(i) * y.frobenius(j) - x.frobenius(j) * y.frobenius(i);
}

inline FieldElem invariant_I0(const FieldElem& x, const FieldElem& y) {
  const FieldElem b01 = bracket(0, 1, x, y);
  require(!b01.is_zero(), Errc::DependentPair, "x and y are linearly dependent over F_p");
  return bracket(1, 2, x, y) / b01;
}

inline FieldElem invariant_I1(const FieldElem& x, const FieldElem& y) {
  const FieldElem b01 = bracket(0, 1, x, y);
  require(!b01.is_zero(), Errc::DependentPair, "x and y are linearly dependent over F_p");
  return bracket(0, 2, x, y) / b01;
}

/// I_0(x,1) = (x^p - x)^(p-1).
inline FieldElem invariant_I0_at_one(const FieldElem& x) {
  const FieldElem d = x.frobenius(1) - x;
  require(!d.is_zero(), Errc::DependentPair, "x lies in F_p");
  return d.pow(x.field().p() - 1);
}

/// nu = -I_1^(p+1) / I_0^p; zero exactly on the F_{p^2} orbit.
inline FieldElem nu(const FieldElem& x, const FieldElem& y) {
  const u64 p = x.field().p();
  const FieldElem i0 = invariant_I0(x, y);
  const FieldElem i1 = invariant_I1(x, y);
  return -(i1.pow(p + 1) / i0.pow(p));
}

/// nu(x,1) through the restricted invariants.
inline FieldElem nu_at_one(const FieldElem& x) {
  const u64 p = x.field().p();
  const FieldElem i0 = invariant_I0_at_one(x);
  const FieldElem i1 = i0 + x.field().one();
  return -(i1.pow(p + 1) / i0.pow(p));
}

/// -[0,2][1,3] / ([0,1][2,3]).
inline FieldElem nu_bracket_form(const FieldElem& x, const FieldElem& y) {
  const FieldElem b01 = bracket(0, 1, x, y);
  require(!b01.is_zero(), Errc::DependentPair, "x and y are linearly dependent over F_p");
  return -(bracket(0, 2, x, y) * bracket(1, 3, x, y) / (b01 * bracket(2, 3, x, y)));
}

/// The bracket expression F_{m,p}(x,y); F_1 = F_2 = 1.
inline FieldElem bracket_F(unsigned m, const FieldElem& x, const FieldElem& y) {
  require(m >= 1, Errc::DegreeTooSmall, "bracket_F needs m >= 1");
  const u64 p = x.field().p();
  const FieldElem b01 = bracket(0, 1, x, y);
  require(!b01.is_zero(), Errc::DependentPair, "x and y are linearly dependent over F_p");
  if (m <= 2) return x.field().one();
  const FieldElem inv01 = b01.inv();
  const u64 k = m / 2;
  if (m % 2 == 1) {
    FieldElem v = bracket(0, m, x, y) * inv01.pow(theta(static_cast<i64>(2 * k), p));
    return k % 2 == 1 ? -v : v;
  }
  const FieldElem b02 = bracket(0, 2, x, y);
  require(!b02.is_zero(), Errc::Fp2OrbitDenominator, "span of x, y lies in the F_{p^2} orbit");
  FieldElem v = bracket(1, 2, x, y) / (b01 * b02) * bracket(0, m, x, y) * inv01.pow(theta(static_cast<i64>(2 * k - 1), p));
  return (k + 1) % 2 == 1 ? -v : v;
}

/// Whether F_{m,p}(x,y) is defined.
inline bool bracket_F_defined(unsigned m, const FieldElem& x, const FieldElem& y) {
  if (bracket(0, 1, x, y).is_zero()) return false;
  if (m % 2 == 0 && m >= 4 && bracket(0, 2, x, y).is_zero()) return false;
  return true;
}

struct AppendixFailure {
  std::string point;
  std::string check;
};

struct AppendixReport {
  unsigned m = 0;
  u64 p = 0;
  unsigned field_degree = 0;
  u64 points_checked = 0;
  u64 points_skipped = 0;
  u64 lemma_checks = 0;
  std::vector<AppendixFailure> failures;
  bool passed() const { return failures.empty(); }
};

struct LemmaCheck {
  unsigned evaluated = 0;
  std::vector<std::string> failed;
};

/// The two nu^theta bracket identities used in the proof of the recursion,
/// for index k >= 1, at (x, y). Identities whose denominators vanish are
/// not evaluated.
inline LemmaCheck appendix_lemma_check(u64 k, const FieldElem& x, const FieldElem& y) {
  LemmaCheck out;
  auto& bad = out.failed;
  const u64 p = x.field().p();
  auto br = [&](u64 i, u64 j) { return bracket(i, j, x, y); };
  const FieldElem n = nu(x, y);
  const FieldElem b01 = br(0, 1);
  const i64 kk = static_cast<i64>(k);
  // nu^theta(2k-1) = [1,2][2k,2k+2][2k+1,2k+2] / ([0,1][0,2][2k,2k+1]) * [0,1]^(-2 theta(2k+1))
  {
    const FieldElem den = b01 * br(0, 2) * br(2 * k, 2 * k + 1);
    if (!den.is_zero()) {
      ++out.evaluated;
      const FieldElem rhs =
          br(1, 2) * br(2 * k, 2 * k + 2) * br(2 * k + 1, 2 * k + 2) / den * b01.inv().pow(2 * theta(2 * kk + 1, p));
      if (!(n.pow(theta(2 * kk - 1, p)) == rhs)) bad.emplace_back("nu^theta(2k-1)");
    }
  }
  // nu^theta(2k) = -[0,1][0,2][2k+1,2k+3] / ([1,2][2k+1,2k+2][2k+2,2k+3]) * [0,1]^(2 theta(2k+1))
  {
    const FieldElem den = br(1, 2) * br(2 * k + 1, 2 * k + 2) * br(2 * k + 2, 2 * k + 3);
    if (!den.is_zero()) {
      ++out.evaluated;
      const FieldElem rhs = -(b01 * br(0, 2) * br(2 * k + 1, 2 * k + 3) / den) * b01.pow(2 * theta(2 * kk + 1, p));
      if (!(n.pow(theta(2 * kk, p)) == rhs)) bad.emplace_back("nu^theta(2k)");
    }
  }
  return out;
}

/// Check F_m = nu^theta(m-3) F_{m-1} + F_{m-2} at every point (x, 1) with
/// x in field \ F_p where all three expressions are defined. With
/// `with_lemmas`, the two nu^theta identities are checked at the same points
/// for k = floor((m-1)/2).
inline AppendixReport verify_appendix_recursion(unsigned m, const Field& field, bool with_lemmas = false,
                                                const Budget& budget = Budget::from_env()) {
  require(m >= 3, Errc::DegreeTooSmall, "recursion check needs m >= 3");
  AppendixReport rep;
  rep.m = m;
  rep.p = field.p();
  rep.field_degree = field.m();
  const FieldElem one = field.one();
  const BigInt th = theta(static_cast<i64>(m) - 3, field.p());
  for (const FieldElem& x : enumerate_elements(field, budget)) {
    if (x.in_prime_field()) continue;
    if (!bracket_F_defined(m, x, one) || !bracket_F_defined(m - 1, x, one) || !bracket_F_defined(m - 2, x, one)) {
      ++rep.points_skipped;
      continue;
    }
    ++rep.points_checked;
    const FieldElem lhs = bracket_F(m, x, one);
    const FieldElem rhs = nu(x, one).pow(th) * bracket_F(m - 1, x, one) + bracket_F(m - 2, x, one);
    if (!(lhs == rhs)) rep.failures.push_back({x.to_string(), "recursion"});
    if (with_lemmas) {
      const LemmaCheck lc = appendix_lemma_check((m - 1) / 2, x, one);
      rep.lemma_checks += lc.evaluated;
      for (const auto& name : lc.failed) rep.failures.push_back({x.to_string(), name});
    }
  }
  return rep;
}

}  // namespace fpt
