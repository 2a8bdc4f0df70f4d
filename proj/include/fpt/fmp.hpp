#pragma once

// The polynomial family f_{m,p}: recursive and zigzag constructions, the
// exponent gap theta(r,p), and checks of its structural properties.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "fpt/budget.hpp"
#include "fpt/error.hpp"
#include "fpt/gf.hpp"
#include "fpt/nt.hpp"
#include "fpt/upoly.hpp"
#include "fpt/zigzag.hpp"

namespace fpt {

/// Dense reductions are materialised only up to this degree.
inline constexpr u64 kMaxDenseDegree = 100000;

/// theta(r,p) = p^r - p^(r-1) + ... + (-1)^r. p = 1 is allowed.
inline BigInt theta(i64 r, u64 p) {
  require(r >= 0, Errc::NegativeIndex, "theta needs r >= 0");
  BigInt t = 1;
  for (i64 i = 1; i <= r; ++i) t = t * p + (i % 2 == 0 ? 1 : -1);
  return t;
}

/// Exponent set of a 0/1 polynomial, sorted ascending.
struct SparseSupport {
  u64 p = 2;
  unsigned m = 0;
  std::vector<BigInt> support;

  std::size_t size() const { return support.size(); }
  /// Largest exponent; -1 for the zero polynomial.
  BigInt degree() const { return support.empty() ? BigInt(-1) : support.back(); }
  bool contains(const BigInt& e) const { return std::binary_search(support.begin(), support.end(), e); }
  friend bool operator==(const SparseSupport&, const SparseSupport&) = default;
};

/// deg f_{m,p}, m >= 2.
inline BigInt degree_formula(unsigned m, u64 p) {
  require(m >= 2, Errc::DegreeTooSmall, "degree formula needs m >= 2");
  const BigInt pm1 = ipow(BigInt(p), m - 1);
  const BigInt den = BigInt(p) * p - 1;
  return m % 2 == 1 ? BigInt((pm1 - 1) / den) : BigInt((pm1 - p) / den);
}

/// f_{m,p} via f_m = X^theta(m-3,p) f_{m-1} + f_{m-2}, f_0 = 0, f_1 = f_2 = 1.
inline SparseSupport build_recursive(unsigned m, u64 p, const Budget& budget = Budget::from_env()) {
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  budget.check(fib(m), "support of f_{" + std::to_string(m) + "," + std::to_string(p) + "}");
  std::vector<BigInt> prev2, prev1{0};  // f_0, f_1
  if (m == 0) return {p, m, {}};
  for (unsigned k = 2; k <= m; ++k) {
    std::vector<BigInt> cur;
    if (k == 2) {
      cur = {0};
    } else {
      const BigInt shift = theta(k - 3, p);
      cur = prev2;
      cur.reserve(prev1.size() + prev2.size());
      for (const auto& e : prev1) cur.push_back(e + shift);
      // prev2 is sorted, the shifted block is sorted, so disjointness means
      // the blocks do not overlap
      if (!prev2.empty() && !prev1.empty() && prev2.back() >= prev1.front() + shift) {
        fail(Errc::SupportCollision, "recursion supports overlap at m=" + std::to_string(k));
      }
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return {p, m, std::move(prev1)};
}

/// f_{m,p} as the sum over down/up sequences eps of length m-2 of
/// X^((-1)^(m-1) ||eps||_{-p}).
inline SparseSupport build_zigzag(unsigned m, u64 p, const Budget& budget = Budget::from_env()) {
  require(m >= 2, Errc::DegreeTooSmall, "zigzag construction needs m >= 2");
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  const BigInt base = -BigInt(p);
  SparseSupport out{p, m, {}};
  for (const auto& eps : enum_zigzag(m - 2, Orientation::DownUp, budget)) {
    BigInt e = value_base(eps, base);
    if (m % 2 == 0) e = -e;
    require(e >= 0, Errc::NegativeExponent, "negative exponent from " + eps.to_string());
    out.support.push_back(std::move(e));
  }
  std::sort(out.support.begin(), out.support.end());
  require(std::adjacent_find(out.support.begin(), out.support.end()) == out.support.end(), Errc::SupportCollision,
          "two sequences give the same exponent");
  return out;
}

/// Number of terms of f_{m,p} and its degree, counted through the recursion
/// without materialising exponents. Disjointness of each step is certified by
/// deg f_{k-2} < theta(k-3,p).
struct SupportCount {
  BigInt size;
  BigInt degree;
};

inline SupportCount support_size(unsigned m, u64 p) {
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  if (m == 0) return {0, -1};
  SupportCount f2{0, -1}, f1{1, 0};  // f_0, f_1
  for (unsigned k = 2; k <= m; ++k) {
    SupportCount cur;
    if (k == 2) {
      cur = {1, 0};
    } else {
      const BigInt shift = theta(k - 3, p);
      require(f2.degree < shift, Errc::SupportCollision, "recursion supports overlap at m=" + std::to_string(k));
      cur = {f1.size + f2.size, f1.degree + shift};
    }
    f2 = f1;
    f1 = cur;
  }
  return f1;
}

/// Digits of n in base -b (b >= 2), least significant first, each in [0, b).
inline std::vector<u64> negabase_digits(BigInt n, u64 b) {
  require(b >= 2, Errc::BadParameter, "base must be at least 2");
  std::vector<u64> out;
  const BigInt base = -BigInt(b);
  while (n != 0) {
    BigInt r = n % base;  // sign follows n
    BigInt q = n / base;
    if (r < 0) {
      r += b;
      q += 1;
    }
    out.push_back(static_cast<u64>(r));
    n = std::move(q);
  }
  return out;
}

/// Reduction of a 0/1 support over F_p.
inline FpPoly to_dense(const SparseSupport& s, const PrimeField& k) {
  if (s.support.empty()) return FpPoly(k);
  require(s.degree() <= kMaxDenseDegree, Errc::BudgetExceeded, "dense degree " + s.degree().str() + " above 10^5");
  std::vector<u64> c(static_cast<std::size_t>(s.degree()) + 1, 0);
  for (const auto& e : s.support) c[static_cast<std::size_t>(e)] = k.add(c[static_cast<std::size_t>(e)], 1);
  return FpPoly(k, std::move(c));
}

/// Evaluate a 0/1 support at a field element.
inline FieldElem eval_support(const SparseSupport& s, const FieldElem& x) {
  FieldElem acc = x.field().zero();
  for (const auto& e : s.support) acc += x.pow(e);
  return acc;
}

/// f_{m,p}(z) for z in F_p via the restricted recursion.
inline u64 eval_fp(unsigned m, const PrimeField& k, u64 z) {
  z %= k.p();
  if (z == 0) return m == 0 ? 0 : 1;
  u64 a = 0, b = 1;  // f_0, f_1
  if (m == 0) return 0;
  for (unsigned n = 2; n <= m; ++n) {
    const u64 c = n % 2 == 1 ? k.add(k.mul(z, b), a) : k.add(b, a);
    a = b;
    b = c;
  }
  return b;
}

inline u64 eval_fp(unsigned m, u64 p, i64 z) {
  const PrimeField k(p);
  return eval_fp(m, k, k.from_int(z));
}

inline FieldElem eval_fp(unsigned m, const FieldElem& z) {
  require(z.in_prime_field(), Errc::NotPrimeFieldElement, "eval_fp needs z in the prime field");
  const PrimeField& k = z.field().prime_field();
  return z.field().from_int(static_cast<i64>(eval_fp(m, k, z.to_prime())));
}

/// gcd(f_m, f_n) = f_gcd(m,n) over F_p, with dense degrees up to 10^5.
inline bool gcd_check(unsigned m, unsigned n, u64 p, const Budget& budget = Budget::from_env()) {
  const PrimeField k(p);
  const unsigned g = std::gcd(m, n);
  for (unsigned i : {m, n}) {
    if (i >= 2) require(degree_formula(i, p) <= kMaxDenseDegree, Errc::BudgetExceeded, "dense degree above 10^5");
  }
  const FpPoly fm = to_dense(build_recursive(m, p, budget), k);
  const FpPoly fn = to_dense(build_recursive(n, p, budget), k);
  const FpPoly fg = to_dense(build_recursive(g, p, budget), k);
  return poly_gcd(fm, fn) == fg.monic();
}

}  // namespace fpt
