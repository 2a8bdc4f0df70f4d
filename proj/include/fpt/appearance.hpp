#pragma once

// Order of appearance alpha(z,p), the classical Fibonacci entry point, and
// desk-scale scans around them.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fpt/error.hpp"
#include "fpt/fmp.hpp"
#include "fpt/gf.hpp"
#include "fpt/nt.hpp"

namespace fpt {

struct AppearanceRecord {
  u64 p = 0;
  u64 z = 0;
  u64 alpha = 0;
};

/// Least m >= 2 with f_{m,p}(z) = 0, for z in F_p^*.
inline AppearanceRecord alpha_zp(i64 z_in, u64 p) {
  const PrimeField k(p);
  const u64 z = k.from_int(z_in);
  require(z != 0, Errc::ZeroArgument, "alpha(0,p) is not defined");
  u64 a = 0, b = 1;  // f_0, f_1
  for (u64 n = 2; n <= p + 1; ++n) {
    const u64 c = n % 2 == 1 ? k.add(k.mul(z, b), a) : k.add(b, a);
    a = b;
    b = c;
    if (b == 0) return {p, z, n};
  }
  fail(Errc::InternalConsistency, "f_{m,p}(z) does not vanish for m <= p+1");
}

/// Fib(n) mod m by fast doubling.
inline u64 fib_mod(u64 n, u64 m) {
  if (m == 1) return 0;
  u64 a = 0, b = 1;  // Fib(k), Fib(k+1)
  for (int bit = 63; bit >= 0; --bit) {
    const u64 two_b_minus_a = (2 * static_cast<u128>(b) + m - a) % m;
    const u64 c = nt::mulmod(a, static_cast<u64>(two_b_minus_a), m);      // Fib(2k)
    const u64 d = static_cast<u64>((static_cast<u128>(nt::mulmod(a, a, m)) + nt::mulmod(b, b, m)) % m);  // Fib(2k+1)
    if ((n >> bit) & 1u) {
      a = d;
      b = static_cast<u64>((static_cast<u128>(c) + d) % m);
    } else {
      a = c;
      b = d;
    }
  }
  return a;
}

/// Least m >= 1 with n | Fib(m), n >= 2. Computed prime power by prime
/// power: alpha(q) divides q - (5/q), and alpha(q^e) = alpha(q) q^j, j < e.
inline u64 alpha_classical(u64 n) {
  require(n >= 2, Errc::BadParameter, "alpha needs n >= 2");
  u64 result = 1;
  for (auto [q, e] : nt::factor(n)) {
    u64 aq = 0;
    if (q == 2) {
      aq = 3;
    } else if (q == 5) {
      aq = 5;
    } else {
      const u64 bound = q - static_cast<u64>(nt::legendre(5, q));
      for (u64 d : nt::divisors(bound)) {
        if (fib_mod(d, q) == 0) {
          aq = d;
          break;
        }
      }
    }
    require(aq != 0, Errc::InternalConsistency, "no entry point below q - (5/q)");
    u64 qe = 1;
    for (unsigned i = 0; i < e; ++i) qe *= q;
    unsigned steps = 0;
    while (fib_mod(aq, qe) != 0) {
      aq *= q;
      require(++steps < e, Errc::InternalConsistency, "entry point of prime power");
    }
    result = std::lcm(result, aq);
  }
  return result;
}

/// alpha(p) divides p - (5/p).
inline bool check_divisibility_law(u64 p) {
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  require(p != 5, Errc::PIsFive, "the law excludes p = 5");
  const i64 target = static_cast<i64>(p) - nt::legendre(5, p);
  return target % static_cast<i64>(alpha_classical(p)) == 0;
}

/// n | Fib(k) iff alpha(n) | k, for all 1 <= k <= limit.
inline bool wall_check(u64 n, u64 limit) {
  require(n >= 2, Errc::BadParameter, "wall_check needs n >= 2");
  const u64 a = alpha_classical(n);
  u64 f0 = 0, f1 = 1;  // Fib(k-1), Fib(k) mod n
  for (u64 k = 1; k <= limit; ++k) {
    if ((f1 == 0) != (k % a == 0)) return false;
    const u64 f2 = (f0 + f1) % n;
    f0 = f1;
    f1 = f2;
  }
  return true;
}

struct SalleReport {
  u64 limit = 0;
  bool bound_holds = true;
  std::vector<u64> equality;  // Z with alpha(Z) = 2Z
  bool equality_is_6_5j = true;
};

inline bool is_six_times_power_of_five(u64 z) {
  if (z % 6 != 0) return false;
  z /= 6;
  while (z % 5 == 0) z /= 5;
  return z == 1;
}

/// alpha(Z) <= 2Z for 2 <= Z <= limit, with equality exactly at 6 * 5^j.
inline SalleReport salle_bound_scan(u64 limit) {
  require(limit <= 100000, Errc::BudgetExceeded, "salle scan limited to 10^5");
  SalleReport rep;
  rep.limit = limit;
  for (u64 z = 2; z <= limit; ++z) {
    const u64 a = alpha_classical(z);
    if (a > 2 * z) rep.bound_holds = false;
    if (a == 2 * z) rep.equality.push_back(z);
    if ((a == 2 * z) != is_six_times_power_of_five(z)) rep.equality_is_6_5j = false;
  }
  return rep;
}

/// Least prime p <= prime_limit with alpha(p) = m.
inline std::optional<u64> carmichael_search(u64 m, u64 prime_limit) {
  for (u64 p : nt::primes_up_to(prime_limit)) {
    if (alpha_classical(p) == m) return p;
  }
  return std::nullopt;
}

/// Least prime with each order of appearance up to max_m, primes <= prime_limit.
inline std::map<u64, u64> carmichael_table(u64 max_m, u64 prime_limit) {
  std::map<u64, u64> out;
  for (u64 p : nt::primes_up_to(prime_limit)) {
    const u64 a = alpha_classical(p);
    if (a <= max_m && !out.count(a)) out[a] = p;
  }
  return out;
}

struct DensityReport {
  u64 limit = 0;
  u64 count_pm1 = 0;  // alpha(p) = p - 1
  u64 count_pp1 = 0;  // alpha(p) = p + 1
  u64 total = 0;      // primes <= limit other than 5
  double density = 0;
  bool pp1_all_pm2_mod5 = true;
  std::vector<u64> pm1_primes, pp1_primes;
};

/// Primes with maximal entry point. p = 5 (alpha(5) = 5) is left out of the
/// total.
inline DensityReport shanks_taylor_density(u64 prime_limit, bool keep_lists = false) {
  require(prime_limit <= 1000000, Errc::BudgetExceeded, "density scan limited to 10^6");
  DensityReport rep;
  rep.limit = prime_limit;
  for (u64 p : nt::primes_up_to(prime_limit)) {
    if (p == 5) continue;
    ++rep.total;
    const u64 a = alpha_classical(p);
    if (a == p - 1) {
      ++rep.count_pm1;
      if (keep_lists) rep.pm1_primes.push_back(p);
    }
    if (a == p + 1) {
      ++rep.count_pp1;
      if (keep_lists) rep.pp1_primes.push_back(p);
      if (p % 5 != 2 && p % 5 != 3) rep.pp1_all_pm2_mod5 = false;
    }
  }
  rep.density = rep.total ? static_cast<double>(rep.count_pm1) / static_cast<double>(rep.total) : 0.0;
  return rep;
}

/// alpha(z,p) as the multiplicative order of a root r of X^2 + (z+2)X + 1,
/// taken in F_p or F_{p^2}; z not in {0, -4}. For p = 2 the root is found by
/// search in F_4.
inline u64 alpha_via_multiplicative_order(i64 z_in, u64 p) {
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
  const PrimeField k(p);
  const u64 z = k.from_int(z_in);
  require(z != 0 && z != k.from_int(-4), Errc::ExcludedZ, "z = 0 and z = -4 are excluded");
  if (p == 2) {
    const Field f4 = make_field(2, 2);
    const FieldElem c = f4.from_int(static_cast<i64>(z) + 2);
    for (const FieldElem& r : enumerate_elements(f4)) {
      if ((r * r + c * r + f4.one()).is_zero()) return mult_order(r);
    }
    fail(Errc::InternalConsistency, "X^2 + (z+2)X + 1 has no root in F_4");
  }
  const u64 disc = k.add(k.mul(z, z), k.mul(4, z));
  const u64 half = k.inv(2);
  const u64 minus_b = k.neg(k.add(z, 2));
  if (nt::legendre(static_cast<i64>(disc), p) == 1) {
    const u64 r = k.mul(k.add(minus_b, nt::sqrt_mod(disc, p)), half);
    return nt::mult_order_mod(r, p);
  }
  const Field f2 = make_field(p, 2);
  const auto s = sqrt(f2.from_int(static_cast<i64>(disc)));
  require(s.has_value(), Errc::InternalConsistency, "every element of F_p is a square in F_{p^2}");
  const FieldElem r = (f2.from_int(static_cast<i64>(minus_b)) + *s) * f2.from_int(static_cast<i64>(half));
  return mult_order(r);
}

/// sigma(r) = -r - 2 - 1/r on F_p \ {0, 1, -1}: value -> preimages.
inline std::map<u64, std::vector<u64>> sigma_image(u64 p) {
  const PrimeField k(p);
  std::map<u64, std::vector<u64>> out;
  for (u64 r = 2; r + 1 < p; ++r) {
    out[k.sub(k.neg(k.add(r, 2)), k.inv(r))].push_back(r);
  }
  return out;
}

}  // namespace fpt
