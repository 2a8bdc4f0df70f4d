#include <gtest/gtest.h>

#include "fpt/nt.hpp"

using namespace fpt;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace

TEST(Nt, IsPrimeMatchesTrialDivision) {
  for (u64 n = 0; n < 5000; ++n) EXPECT_EQ(nt::is_prime(n), trial_prime(n)) << n;
  EXPECT_TRUE(nt::is_prime(2971215073ULL));
  EXPECT_FALSE(nt::is_prime(2971215073ULL * 3));
}

TEST(Nt, FactorMultipliesBack) {
  for (u64 n = 2; n < 3000; ++n) {
    u64 prod = 1;
    for (auto [q, e] : nt::factor(n)) {
      EXPECT_TRUE(trial_prime(q));
      for (unsigned i = 0; i < e; ++i) prod *= q;
    }
    EXPECT_EQ(prod, n);
  }
  // Fib(47)
  const auto f = nt::factor(2971215073ULL);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.begin()->first, 2971215073ULL);
}

TEST(Nt, DivisorsAreSortedAndComplete) {
  for (u64 n = 1; n < 500; ++n) {
    std::vector<u64> brute;
    for (u64 d = 1; d <= n; ++d) {
      if (n % d == 0) brute.push_back(d);
    }
    EXPECT_EQ(nt::divisors(n), brute);
  }
}

TEST(Nt, PrimeCounts) {
  EXPECT_EQ(nt::primes_up_to(100).size(), 25u);
  EXPECT_EQ(nt::primes_up_to(10000).size(), 1229u);
}

TEST(Nt, LegendreMatchesSquares) {
  for (u64 p : nt::primes_up_to(60)) {
    if (p == 2) continue;
    std::vector<bool> sq(p, false);
    for (u64 x = 1; x < p; ++x) sq[x * x % p] = true;
    for (u64 a = 0; a < p; ++a) {
      const int expected = a == 0 ? 0 : (sq[a] ? 1 : -1);
      EXPECT_EQ(nt::legendre(static_cast<i64>(a), p), expected);
      EXPECT_EQ(nt::legendre(static_cast<i64>(a) - static_cast<i64>(p), p), expected);
      if (expected == 1) {
        const u64 r = nt::sqrt_mod(a, p);
        EXPECT_EQ(r * r % p, a);
        EXPECT_LE(r, p - r);
      }
    }
  }
}

TEST(Nt, KroneckerAtTwo) {
  EXPECT_EQ(nt::legendre(5, 2), -1);
  EXPECT_EQ(nt::legendre(1, 2), 1);
  EXPECT_EQ(nt::legendre(7, 2), 1);
  EXPECT_EQ(nt::legendre(4, 2), 0);
}

TEST(Nt, InverseAndOrder) {
  for (u64 p : {3, 7, 19, 97}) {
    for (u64 a = 1; a < p; ++a) {
      EXPECT_EQ(a * nt::inv_mod(a, p) % p, 1u);
      u64 ord = 1, x = a;
      while (x != 1) {
        x = x * a % p;
        ++ord;
      }
      EXPECT_EQ(nt::mult_order_mod(a, p), ord);
    }
  }
}

TEST(Nt, PowmodAndMulmodLarge) {
  const u64 p = 2971215073ULL;
  EXPECT_EQ(nt::powmod(3, p - 1, p), 1u);
  EXPECT_EQ(nt::mulmod(p - 1, p - 1, p), 1u);
  EXPECT_EQ(mod_i64(-1, 7), 6u);
  EXPECT_EQ(mod_u64(BigInt(-15), 7), 6u);
}
