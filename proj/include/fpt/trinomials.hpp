#pragma once

// gamma_z and its trinomial forms, the factorisation-degree prediction for
// X^(p+1) - aX - b, and the checks built on the roots of gamma-bar.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpt/appearance.hpp"
#include "fpt/dickson.hpp"
#include "fpt/error.hpp"
#include "fpt/gf.hpp"
#include "fpt/nt.hpp"
#include "fpt/planes.hpp"
#include "fpt/upoly.hpp"

namespace fpt {

/// gamma_z(X) = X^(p+1) + (1+z) X^p + X + 1.
inline FpPoly gamma(i64 z, u64 p) {
  const PrimeField k(p);
  std::vector<u64> c(p + 2, 0);
  c[0] = 1;
  c[1] = k.add(c[1], 1);
  c[p] = k.add(c[p], k.add(1, k.from_int(z)));
  c[p + 1] = 1;
  return FpPoly(k, std::move(c));
}

/// gamma_z(X - z - 1), by a literal Taylor shift.
inline FpPoly beta(i64 z, u64 p) {
  const PrimeField k(p);
  return shift_argument(gamma(z, p), k.neg(k.add(k.from_int(z), 1)));
}

/// X^(p+1) - zX - z.
inline FpPoly beta_closed(i64 z, u64 p) {
  const PrimeField k(p);
  std::vector<u64> c(p + 2, 0);
  c[0] = k.neg(k.from_int(z));
  c[1] = k.add(c[1], k.neg(k.from_int(z)));
  c[p + 1] = 1;
  return FpPoly(k, std::move(c));
}

/// z^-2 beta_z(zX).
inline FpPoly delta(i64 z_in, u64 p) {
  const PrimeField k(p);
  const u64 z = k.from_int(z_in);
  require(z != 0, Errc::ZeroZ, "delta needs z != 0");
  return scale_argument(beta(z_in, p), z).scale(k.inv(k.mul(z, z)));
}

/// X^(p+1) - X - 1/z.
inline FpPoly delta_closed(i64 z_in, u64 p) {
  const PrimeField k(p);
  const u64 z = k.from_int(z_in);
  require(z != 0, Errc::ZeroZ, "delta needs z != 0");
  std::vector<u64> c(p + 2, 0);
  c[0] = k.neg(k.inv(z));
  c[1] = k.add(c[1], k.neg(1));
  c[p + 1] = 1;
  return FpPoly(k, std::move(c));
}

/// X^(p+1) - aX - b.
inline FpPoly trinomial(i64 a, i64 b, u64 p) {
  const PrimeField k(p);
  std::vector<u64> c(p + 2, 0);
  c[0] = k.neg(k.from_int(b));
  c[1] = k.add(c[1], k.neg(k.from_int(a)));
  c[p + 1] = 1;
  return FpPoly(k, std::move(c));
}

/// Roots in F_p of X^2 + (z+2)X + 1, ascending.
inline std::vector<u64> linear_roots(i64 z_in, u64 p) {
  const PrimeField k(p);
  const u64 z = k.from_int(z_in);
  const u64 b = k.add(z, 2);
  if (p == 2) {
    std::vector<u64> out;
    for (u64 r = 0; r < 2; ++r) {
      if (k.add(k.add(k.mul(r, r), k.mul(b, r)), 1) == 0) out.push_back(r);
    }
    return out;
  }
  const u64 disc = k.add(k.mul(z, z), k.mul(4, z));
  const int leg = nt::legendre(static_cast<i64>(disc), p);
  if (leg == -1) return {};
  const u64 s = nt::sqrt_mod(disc, p);
  const u64 half = k.inv(2);
  const u64 r1 = k.mul(k.add(k.neg(b), s), half);
  const u64 r2 = k.mul(k.sub(k.neg(b), s), half);
  if (r1 == r2) return {r1};
  return {std::min(r1, r2), std::max(r1, r2)};
}

/// gamma_z with its linear-factor content removed.
inline FpPoly gamma_bar(i64 z_in, u64 p) {
  const PrimeField k(p);
  const u64 z = k.from_int(z_in);
  if (z == 0) return FpPoly::constant(k, 1);
  const FpPoly g = gamma(z_in, p);
  FpPoly d;
  if (z == k.from_int(-4)) {
    d = FpPoly::from_ints(k, {-1, 1});
  } else if (linear_roots(z_in, p).empty()) {
    return g;
  } else {
    d = FpPoly(k, {1, k.add(z, 2), 1});
  }
  auto [q, r] = g.divmod(d);
  require(r.is_zero(), Errc::InternalConsistency, "gamma_bar division is not exact");
  return q;
}

/// X^p - 1 - 2 sum_{i=1}^{p-1} X^i.
inline FpPoly gamma_bar_minus4_closed(u64 p) {
  const PrimeField k(p);
  std::vector<u64> c(p + 1, k.from_int(-2));
  c[0] = k.from_int(-1);
  c[p] = 1;
  return FpPoly(k, std::move(c));
}

enum class TrinomialBranch { Nonsquare, NonzeroSquare, ZetaMinusQuarter, ZetaZero };

inline const char* branch_name(TrinomialBranch b) {
  switch (b) {
    case TrinomialBranch::Nonsquare: return "nonsquare";
    case TrinomialBranch::NonzeroSquare: return "nonzero-square";
    case TrinomialBranch::ZetaMinusQuarter: return "zeta=-1/4";
    case TrinomialBranch::ZetaZero: return "zeta=0";
  }
  return "?";
}

struct TrinomialCase {
  u64 p = 0, a = 0, b = 0;
  u64 zeta = 0;
  std::optional<u64> z;  // 1/zeta
  TrinomialBranch branch = TrinomialBranch::ZetaZero;
};

inline TrinomialCase classify_trinomial(i64 a_in, i64 b_in, u64 p) {
  require(p != 2, Errc::UnsupportedPrime, "the branch analysis needs odd p");
  const PrimeField k(p);
  TrinomialCase c;
  c.p = p;
  c.a = k.from_int(a_in);
  c.b = k.from_int(b_in);
  require(c.a != 0, Errc::ZeroA, "a must be nonzero");
  c.zeta = k.div(c.b, k.mul(c.a, c.a));
  if (c.zeta == 0) {
    c.branch = TrinomialBranch::ZetaZero;
    return c;
  }
  c.z = k.inv(c.zeta);
  const u64 disc = k.add(1, k.mul(4, c.zeta));
  if (disc == 0) {
    c.branch = TrinomialBranch::ZetaMinusQuarter;
  } else {
    c.branch = nt::legendre(static_cast<i64>(disc), p) == 1 ? TrinomialBranch::NonzeroSquare : TrinomialBranch::Nonsquare;
  }
  return c;
}

/// Degrees of the irreducible factors of X^(p+1) - aX - b from the order m of
/// a root r of zeta X^2 + (2 zeta + 1) X + zeta.
inline DegreeMultiset predict_degrees(i64 a, i64 b, u64 p) {
  const TrinomialCase c = classify_trinomial(a, b, p);
  const PrimeField k(p);
  DegreeMultiset out;
  auto count = [&](u64 total, u64 m) {
    require(total % m == 0, Errc::InternalConsistency, "factor count is not integral");
    return total / m;
  };
  switch (c.branch) {
    case TrinomialBranch::ZetaZero:
      out.add(1, p + 1);
      return out;
    case TrinomialBranch::ZetaMinusQuarter:
      out.add(1, 1);
      out.add(p, 1);
      return out;
    case TrinomialBranch::NonzeroSquare: {
      // r = (-(2 zeta + 1) + sqrt(1 + 4 zeta)) / (2 zeta)
      const u64 s = nt::sqrt_mod(k.add(1, k.mul(4, c.zeta)), p);
      const u64 r = k.div(k.add(k.neg(k.add(k.mul(2, c.zeta), 1)), s), k.mul(2, c.zeta));
      const u64 m = nt::mult_order_mod(r, p);
      out.add(1, 2);
      out.add(m, count(p - 1, m));
      return out;
    }
    case TrinomialBranch::Nonsquare: {
      const Field f2 = make_field(p, 2);
      const auto s = sqrt(f2.from_int(static_cast<i64>(k.add(1, k.mul(4, c.zeta)))));
      require(s.has_value(), Errc::InternalConsistency, "square root in F_{p^2}");
      const FieldElem zeta = f2.from_int(static_cast<i64>(c.zeta));
      const FieldElem r = (-(zeta + zeta + f2.one()) + *s) / (zeta + zeta);
      const u64 m = mult_order(r);
      out.add(m, count(p + 1, m));
      return out;
    }
  }
  fail(Errc::InternalConsistency, "unreachable branch");
}

struct DegreeVerification {
  std::optional<DegreeMultiset> predicted;  // absent for p = 2
  DegreeMultiset actual;
  bool match = false;
};

/// Prediction against distinct-degree factorisation. For p = 2 there is no
/// prediction; the nonlinear degrees are checked against alpha(1/zeta, 2).
inline DegreeVerification verify_degrees(i64 a, i64 b, u64 p) {
  require(p <= 1000, Errc::BudgetExceeded, "verify_degrees limited to p <= 1000");
  DegreeVerification v;
  const PrimeField k(p);
  require(k.from_int(a) != 0, Errc::ZeroA, "a must be nonzero");
  v.actual = distinct_degree_factor(trinomial(a, b, p));
  if (p != 2) {
    v.predicted = predict_degrees(a, b, p);
    v.match = *v.predicted == v.actual;
    return v;
  }
  if (k.from_int(b) == 0) {
    v.match = v.actual == DegreeMultiset{{1, 3}};
    return v;
  }
  const u64 alpha = alpha_zp(1, 2).alpha;
  v.match = true;
  for (auto [d, c] : v.actual.counts()) {
    if (d != 1 && d != alpha) v.match = false;
  }
  return v;
}

/// Evaluate an F_p polynomial at an element of an extension.
inline FieldElem eval_at(const FpPoly& f, const FieldElem& x) {
  FieldElem acc = x.field().zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + x.field().from_int(static_cast<i64>(f.coeffs()[i]));
  return acc;
}

/// Roots of gamma-bar_z in F_{p^alpha(z,p)}, by an evaluation sweep.
inline std::vector<FieldElem> gamma_bar_roots(i64 z, u64 p, const Budget& budget = Budget::from_env()) {
  const u64 m = alpha_zp(z, p).alpha;
  budget.check(ipow(BigInt(p), static_cast<unsigned>(m)), "splitting field of gamma-bar");
  const Field f = make_field(p, static_cast<unsigned>(m));
  const FpPoly gb = gamma_bar(z, p);
  std::vector<FieldElem> roots;
  for (const FieldElem& x : enumerate_elements(f, budget)) {
    if (eval_at(gb, x).is_zero()) roots.push_back(x);
  }
  require(roots.size() == static_cast<std::size_t>(gb.degree()), Errc::InternalConsistency,
          "gamma-bar does not split in F_{p^alpha}");
  return roots;
}

struct Frob2Report {
  u64 p = 0, z = 0, m = 0;
  u64 roots = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// I_0(t,1) = t^(p^2) at every root t of gamma-bar_z.
inline Frob2Report frob2_check(i64 z, u64 p, const Budget& budget = Budget::from_env()) {
  Frob2Report rep;
  rep.p = p;
  rep.z = PrimeField(p).from_int(z);
  rep.m = alpha_zp(z, p).alpha;
  for (const FieldElem& t : gamma_bar_roots(z, p, budget)) {
    ++rep.roots;
    if (!(invariant_I0_at_one(t) == t.frobenius(2))) rep.failures.push_back(t.to_string());
  }
  return rep;
}

/// Each root of gamma-bar_z lies in the pencil of z, and distinct roots lie
/// in distinct planes through F_p.
inline bool roots_distinct_planes_check(i64 z, u64 p, const Budget& budget = Budget::from_env()) {
  const auto roots = gamma_bar_roots(z, p, budget);
  if (roots.empty()) return true;
  const Field& f = roots.front().field();
  const FieldElem zz = f.from_int(z);
  std::set<Plane> planes;
  for (const FieldElem& t : roots) {
    if (!(nu_at_one(t) == zz)) return false;
    if (!planes.insert(canonical_plane(f.one(), t)).second) return false;
  }
  return true;
}

struct GeneratedIrreducible {
  u64 z = 0;
  FpPoly poly;
  bool whole_gamma_bar = false;
};

/// An irreducible polynomial of degree m over F_p from an element r of order
/// m in F_{p^2}: a factor of gamma-bar_z with z = -r - 2 - 1/r.
inline GeneratedIrreducible generate_irreducible(u64 p, u64 m, u64 seed = 1) {
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  require(p != 2, Errc::UnsupportedPrime, "generation needs odd p");
  require(m >= 3, Errc::OrderTooSmall, "orders below 3 give linear factors");
  const u64 q1 = p * p - 1;
  require(q1 % m == 0, Errc::NoSuchOrder, std::to_string(m) + " does not divide p^2 - 1");
  const Field f2 = make_field(p, 2);
  const FieldElem r = primitive_element(f2).pow(q1 / m);
  const FieldElem zf = -r - f2.from_int(2) - r.inv();
  require(zf.in_prime_field(), Errc::ZNotInPrimeField, "-r-2-1/r is not in F_p; m divides neither p-1 nor p+1");
  GeneratedIrreducible out;
  out.z = zf.to_prime();
  const FpPoly gb = gamma_bar(static_cast<i64>(out.z), p);
  if (static_cast<u64>(gb.degree()) == m) {
    out.poly = gb;
    out.whole_gamma_bar = true;
  } else {
    auto parts = equal_degree_split(gb.monic(), m, seed);
    std::sort(parts.begin(), parts.end(), [](const FpPoly& a, const FpPoly& b) { return a.coeffs() < b.coeffs(); });
    out.poly = parts.front();
  }
  require(static_cast<u64>(out.poly.degree()) == m && is_irreducible(out.poly), Errc::InternalConsistency,
          "generated polynomial is not irreducible of degree m");
  return out;
}

}  // namespace fpt
