#pragma once

// Integer helpers shared by every module: arbitrary-precision alias,
// 64-bit modular arithmetic, primality, factorisation, Legendre symbols.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fpt/error.hpp"

namespace fpt {

using BigInt = boost::multiprecision::cpp_int;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

/// Non-negative residue of a (possibly negative) big integer.
inline u64 mod_u64(const BigInt& v, u64 n) {
  BigInt r = v % n;
  if (r < 0) r += n;
  return static_cast<u64>(r);
}

inline u64 mod_i64(i64 v, u64 n) {
  i64 r = v % static_cast<i64>(n);
  return static_cast<u64>(r < 0 ? r + static_cast<i64>(n) : r);
}

namespace nt {

inline u64 mulmod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

inline u64 powmod(u64 b, u64 e, u64 n) {
  u64 r = 1 % n;
  b %= n;
  while (e) {
    if (e & 1u) r = mulmod(r, b, n);
    b = mulmod(b, b, n);
    e >>= 1u;
  }
  return r;
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 sp : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % sp == 0) return n == sp;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1u;
    ++s;
  }
  // deterministic for all 64-bit n
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

inline u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 x = 2, y = 2, d = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

inline void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  for (u64 sp = 2; sp < 64 && sp * sp <= n; ++sp) {
    while (n % sp == 0) {
      ++out[sp];
      n /= sp;
    }
  }
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  u64 d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace detail

/// Prime factorisation as prime -> exponent.
inline std::map<u64, unsigned> factor(u64 n) {
  std::map<u64, unsigned> out;
  if (n > 1) detail::factor_into(n, out);
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (auto [q, e] : factor(n)) {
    const std::size_t cur = ds.size();
    u64 pw = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < cur; ++i) ds.push_back(ds[i] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

/// Legendre symbol (a/p) for an odd prime p; for p = 2 the Kronecker
/// symbol is used so that the Fibonacci divisibility law reads uniformly.
inline int legendre(i64 a, u64 p) {
  if (p == 2) {
    const u64 r = mod_i64(a, 8);
    if (r % 2 == 0) return 0;
    return (r == 1 || r == 7) ? 1 : -1;
  }
  const u64 r = mod_i64(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

/// Square root modulo an odd prime (Tonelli-Shanks); caller guarantees a
/// square. Returns the smaller of the two roots.
inline u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0 || p == 2) return a;
  require(legendre(static_cast<i64>(a), p) == 1, Errc::InternalConsistency, "sqrt_mod of a non-residue");
  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1u) == 0) {
    q >>= 1u;
    ++s;
  }
  u64 z = 2;
  while (legendre(static_cast<i64>(z), p) != -1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

inline u64 inv_mod(u64 a, u64 p) {
  require(a % p != 0, Errc::DivisionByZero, "inverse of zero residue");
  return powmod(a, p - 2, p);
}

/// Multiplicative order of a modulo prime p.
inline u64 mult_order_mod(u64 a, u64 p) {
  a %= p;
  require(a != 0, Errc::ZeroElement, "order of zero residue");
  u64 ord = p - 1;
  for (auto [q, e] : factor(p - 1)) {
    for (unsigned k = 0; k < e && ord % q == 0 && powmod(a, ord / q, p) == 1; ++k) ord /= q;
  }
  return ord;
}

}  // namespace nt
}  // namespace fpt
