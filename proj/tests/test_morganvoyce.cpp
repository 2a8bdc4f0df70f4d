#include <gtest/gtest.h>

#include "fpt/appearance.hpp"
#include "fpt/fmp.hpp"
#include "fpt/morganvoyce.hpp"

using namespace fpt;

namespace {

IntPoly substitute_square(const IntPoly& f) {
  std::vector<BigInt> c(f.is_zero() ? 0 : 2 * f.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[2 * i] = f.coeffs()[i];
  return IntPoly(std::move(c));
}

}  // namespace

TEST(MorganVoyce, SmallPolynomials) {
  EXPECT_TRUE(f_m1(0).is_zero());
  EXPECT_EQ(f_m1(1), IntPoly({1}));
  EXPECT_EQ(f_m1(3), IntPoly({1, 1}));
  EXPECT_EQ(f_m1(6), IntPoly({3, 4, 1}));
  EXPECT_EQ(mv_poly(MVKind::b, 2), IntPoly({1, 3, 1}));
  EXPECT_EQ(mv_poly(MVKind::B, 2), IntPoly({3, 4, 1}));
}

TEST(MorganVoyce, AlternateIndexing) {
  for (u64 k = 0; k <= 50; ++k) {
    EXPECT_EQ(mv_poly(MVKind::b, k), f_m1(static_cast<unsigned>(2 * k + 1))) << k;
    EXPECT_EQ(mv_poly(MVKind::B, k), f_m1(static_cast<unsigned>(2 * k + 2))) << k;
  }
}

TEST(MorganVoyce, ThreeTerm) {
  for (u64 k = 2; k <= 40; ++k) {
    EXPECT_TRUE(mv_three_term_check(MVKind::b, k));
    EXPECT_TRUE(mv_three_term_check(MVKind::B, k));
  }
  EXPECT_THROW(mv_three_term_check(MVKind::b, 1), Error);
}

TEST(MorganVoyce, FibonacciPolynomials) {
  for (unsigned k = 0; k <= 30; ++k) {
    EXPECT_EQ(fib_poly(2 * k + 1), substitute_square(mv_poly(MVKind::b, k)));
    EXPECT_EQ(fib_poly(2 * k + 2), IntPoly::x() * substitute_square(mv_poly(MVKind::B, k)));
  }
  for (unsigned m = 0; m < 60; ++m) EXPECT_EQ(fib_poly(m).eval(1), fib(m));
}

TEST(MorganVoyce, ValuesAreEvaluations) {
  for (u64 n = 0; n <= 40; ++n) {
    for (i64 Z : {-3, -1, 0, 1, 2, 5}) EXPECT_EQ(mv_value(n, Z), f_m1(static_cast<unsigned>(n)).eval(Z)) << n << " " << Z;
  }
  EXPECT_EQ(lehmer_U(10, 1, -1), fib(10));
}

TEST(MorganVoyce, ReductionModPOnUnits) {
  for (u64 p : {2, 3, 5, 7, 11, 13}) {
    const PrimeField k(p);
    for (unsigned n = 0; n <= 30; ++n) {
      for (u64 z = 1; z < p; ++z) {
        EXPECT_EQ(mod_u64(mv_value(n, z), p), eval_fp(n, k, z)) << n << " " << z << " " << p;
        EXPECT_EQ(mod_u64(mv_value(n, BigInt(z) + 3 * p), p), eval_fp(n, k, z));
      }
    }
  }
}

TEST(MorganVoyce, ZeroArgumentDiffersForEvenIndex) {
  // at Z = 0 the integer sequence is n/2 for even n, while every f_{n,p}
  // with n >= 1 has constant term 1
  for (unsigned n = 1; n <= 20; ++n) {
    EXPECT_EQ(eval_fp(n, 7, 0), 1u);
    if (n % 2 == 0) {
      EXPECT_EQ(mv_value(n, 0), n / 2);
      EXPECT_EQ(f_m1(n).coeff(0), n / 2);
    } else {
      EXPECT_EQ(mv_value(n, 0), 1);
    }
  }
}

TEST(MorganVoyce, ApparitionMatchesAlpha) {
  EXPECT_EQ(mv_apparition(16, 19, 16), 6u);
  EXPECT_EQ(mv_apparition(1, 11, 1), 10u);
  for (u64 p : nt::primes_up_to(200)) {
    for (u64 z = 1; z < p; ++z) {
      EXPECT_EQ(mv_apparition(static_cast<i64>(z), p, BigInt(z) + p), alpha_zp(static_cast<i64>(z), p).alpha) << z << " " << p;
    }
  }
}

TEST(MorganVoyce, ApparitionErrors) {
  EXPECT_THROW(mv_apparition(3, 19, 4), Error);
  EXPECT_THROW(mv_apparition(0, 19, 19), Error);
  EXPECT_THROW(mv_apparition(1, 15, 1), Error);
}
