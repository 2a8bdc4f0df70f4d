#include <gtest/gtest.h>

#include <random>

#include "fpt/dickson.hpp"

using namespace fpt;

TEST(Dickson, BracketIsAlternatingAndLinear) {
  const Field f = make_field(3, 4);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const FieldElem x = f.random(rng), y = f.random(rng), w = f.random(rng);
    const FieldElem c = f.from_int(static_cast<i64>(rng() % 3));
    EXPECT_EQ(bracket(0, 1, x, y), -bracket(0, 1, y, x));
    EXPECT_EQ(bracket(1, 0, x, y), -bracket(0, 1, x, y));
    EXPECT_TRUE(bracket(2, 2, x, y).is_zero());
    EXPECT_EQ(bracket(0, 2, c * x + w, y), c * bracket(0, 2, x, y) + bracket(0, 2, w, y));
  }
}

TEST(Dickson, InvariantsAreBasisAndDilationInvariant) {
  const Field f = make_field(3, 4);
  std::mt19937_64 rng(4);
  int tested = 0;
  while (tested < 40) {
    const FieldElem x = f.random(rng), y = f.random(rng);
    if (bracket(0, 1, x, y).is_zero()) continue;
    ++tested;
    // change of basis by an invertible 2x2 matrix over F_3
    const FieldElem x2 = x + y, y2 = x - y;
    EXPECT_EQ(invariant_I0(x, y), invariant_I0(x2, y2));
    EXPECT_EQ(invariant_I1(x, y), invariant_I1(x2, y2));
    FieldElem lam = f.random(rng);
    if (lam.is_zero()) lam = f.one();
    EXPECT_EQ(nu(x, y), nu(lam * x, lam * y));
    EXPECT_EQ(nu(x, y), nu_bracket_form(x, y));
  }
}

TEST(Dickson, RestrictedInvariants) {
  const Field f = make_field(5, 3);
  for (const auto& x : enumerate_elements(f)) {
    if (x.in_prime_field()) {
      EXPECT_THROW(invariant_I0_at_one(x), Error);
      continue;
    }
    EXPECT_EQ(invariant_I0_at_one(x), invariant_I0(x, f.one()));
    EXPECT_EQ(invariant_I1(x, f.one()), invariant_I0_at_one(x) + f.one());
    EXPECT_EQ(nu_at_one(x), nu(x, f.one()));
  }
}

TEST(Dickson, NuVanishesExactlyOnQuadraticSubfieldPlanes) {
  const Field f = make_field(3, 4);
  for (const auto& x : enumerate_elements(f)) {
    if (x.in_prime_field()) continue;
    EXPECT_EQ(nu_at_one(x).is_zero(), in_subfield(x, 2));
  }
}

TEST(Dickson, BracketFBaseValues) {
  const Field f = make_field(2, 5);
  const FieldElem x = f.x();
  EXPECT_TRUE(bracket_F(1, x, f.one()).is_one());
  EXPECT_TRUE(bracket_F(2, x, f.one()).is_one());
  EXPECT_THROW(bracket_F(3, f.one(), f.one()), Error);
  const Field g = make_field(3, 2);
  EXPECT_FALSE(bracket_F_defined(4, g.x(), g.one()));
  EXPECT_THROW(bracket_F(4, g.x(), g.one()), Error);
}

TEST(Dickson, BracketFVanishesWhereFmpDoes) {
  // F_{m,p}(x,1) = f_{m,p}(nu(x,1)) on points where both sides are defined
  const Field f = make_field(3, 3);
  for (const auto& x : enumerate_elements(f)) {
    if (x.in_prime_field()) continue;
    for (unsigned m = 3; m <= 7; ++m) {
      if (!bracket_F_defined(m, x, f.one())) continue;
      const FieldElem n = nu_at_one(x);
      EXPECT_EQ(bracket_F(m, x, f.one()), eval_support(build_recursive(m, 3), n)) << m;
    }
  }
}

TEST(Dickson, AppendixRecursionAndLemmas) {
  for (unsigned m = 3; m <= 6; ++m) {
    const auto r = verify_appendix_recursion(m, make_field(3, m), true);
    EXPECT_TRUE(r.passed()) << m;
    EXPECT_GT(r.points_checked, 0u);
    EXPECT_GT(r.lemma_checks, 0u);
  }
  for (unsigned m = 3; m <= 8; ++m) EXPECT_TRUE(verify_appendix_recursion(m, make_field(2, m)).passed()) << m;
  // the identity also holds in fields of other degrees
  EXPECT_TRUE(verify_appendix_recursion(5, make_field(5, 2)).passed());
  EXPECT_THROW(verify_appendix_recursion(2, make_field(2, 3)), Error);
}
