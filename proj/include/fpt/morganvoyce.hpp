#pragma once

// Morgan-Voyce polynomials, Fibonacci polynomials and Lehmer sequences over
// the integers.

#include <string>

#include "fpt/error.hpp"
#include "fpt/nt.hpp"
#include "fpt/upoly.hpp"

namespace fpt {

/// f_{m,1}: f_0 = 0, f_1 = 1, f_m = X f_{m-1} + f_{m-2} for odd m and
/// f_m = f_{m-1} + f_{m-2} for even m.
inline IntPoly f_m1(unsigned m) {
  IntPoly a, b{1};
  if (m == 0) return a;
  for (unsigned n = 2; n <= m; ++n) {
    IntPoly c = n % 2 == 1 ? IntPoly::x() * b + a : b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

enum class MVKind { b, B };

inline BigInt binomial(u64 n, u64 k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (u64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// b_k = sum C(k+i, k-i) X^i and B_k = sum C(k+i+1, k-i) X^i.
inline IntPoly mv_poly(MVKind kind, u64 k) {
  std::vector<BigInt> c;
  for (u64 i = 0; i <= k; ++i) c.push_back(binomial(k + i + (kind == MVKind::B ? 1 : 0), k - i));
  return IntPoly(std::move(c));
}

/// P_k = (X+2) P_{k-1} - P_{k-2} within one family, k >= 2.
inline bool mv_three_term_check(MVKind kind, u64 k) {
  require(k >= 2, Errc::BadParameter, "three-term check needs k >= 2");
  return mv_poly(kind, k) == IntPoly({2, 1}) * mv_poly(kind, k - 1) - mv_poly(kind, k - 2);
}

/// Fibonacci polynomials: F_0 = 0, F_1 = 1, F_m = X F_{m-1} + F_{m-2}.
inline IntPoly fib_poly(unsigned m) {
  IntPoly a, b{1};
  if (m == 0) return a;
  for (unsigned n = 2; n <= m; ++n) {
    IntPoly c = IntPoly::x() * b + a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

/// U_n(sqrt Z, Q): U_0 = 0, U_1 = 1, U_n = Z U_{n-1} - Q U_{n-2} for odd n and
/// U_{n-1} - Q U_{n-2} for even n.
inline BigInt lehmer_U(u64 n, const BigInt& Z, const BigInt& Q) {
  BigInt a = 0, b = 1;
  if (n == 0) return a;
  for (u64 i = 2; i <= n; ++i) {
    BigInt c = (i % 2 == 1 ? BigInt(Z * b) : b) - Q * a;
    a = std::move(b);
    b = std::move(c);
  }
  return b;
}

/// Morgan-Voyce value MV_n(Z) = U_n(sqrt Z, -1).
inline BigInt mv_value(u64 n, const BigInt& Z) { return lehmer_U(n, Z, -1); }

/// Least m <= p+1 with p | MV_m(Z), where Z is an integer lift of z in F_p^*.
inline u64 mv_apparition(i64 z, u64 p, const BigInt& Z) {
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  require(mod_i64(z, p) != 0, Errc::ZeroResidue, "z must be nonzero mod p");
  require(mod_u64(Z, p) == mod_i64(z, p), Errc::BadParameter, "Z is not a lift of z");
  BigInt a = 0, b = 1;
  for (u64 m = 2; m <= p + 1; ++m) {
    BigInt c = (m % 2 == 1 ? BigInt(Z * b) : b) + a;
    a = std::move(b);
    b = std::move(c);
    if (b % p == 0) return m;
  }
  fail(Errc::InternalConsistency, "no Morgan-Voyce value below p+2 is divisible by p");
}

}  // namespace fpt
