#include <gtest/gtest.h>

#include <random>

#include "fpt/upoly.hpp"

using namespace fpt;

namespace {

FpPoly from_index(const PrimeField& k, u64 idx, unsigned deg) {
  std::vector<u64> c(deg + 1, 0);
  c[deg] = 1;
  for (unsigned i = 0; i < deg; ++i) {
    c[i] = idx % k.p();
    idx /= k.p();
  }
  return FpPoly(k, std::move(c));
}

// Degrees of the irreducible factors by repeated trial division by every
// monic polynomial in increasing degree.
DegreeMultiset brute_factor_degrees(FpPoly f) {
  const PrimeField& k = f.ctx();
  DegreeMultiset out;
  f = f.monic();
  for (unsigned d = 1; f.degree() >= 1; ++d) {
    if (static_cast<long>(2 * d) > f.degree()) {
      out.add(static_cast<u64>(f.degree()));
      break;
    }
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= k.p();
    for (u64 t = 0; t < count; ++t) {
      const FpPoly g = from_index(k, t, d);
      while (f.degree() >= static_cast<long>(d) && (f % g).is_zero()) {
        f = f / g;
        out.add(d);
      }
    }
  }
  return out;
}

FpPoly random_poly(const PrimeField& k, std::mt19937_64& rng, unsigned deg) {
  std::vector<u64> c(deg + 1);
  for (auto& v : c) v = k.random(rng);
  c[deg] = 1;
  return FpPoly(k, std::move(c));
}

}  // namespace

TEST(Upoly, DivmodReconstructs) {
  const PrimeField k(7);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    const FpPoly a = random_poly(k, rng, static_cast<unsigned>(rng() % 12));
    const FpPoly b = random_poly(k, rng, static_cast<unsigned>(rng() % 6));
    auto [q, r] = a.divmod(b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
  EXPECT_THROW(FpPoly::constant(k, 1).divmod(FpPoly(k)), Error);
}

TEST(Upoly, GcdDividesBoth) {
  const PrimeField k(5);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    const FpPoly c = random_poly(k, rng, 2);
    const FpPoly a = c * random_poly(k, rng, 3);
    const FpPoly b = c * random_poly(k, rng, 4);
    const FpPoly g = poly_gcd(a, b);
    EXPECT_TRUE((a % g).is_zero());
    EXPECT_TRUE((b % g).is_zero());
    EXPECT_TRUE((g % c.monic()).is_zero());
    EXPECT_EQ(g.lead(), 1u);
  }
}

TEST(Upoly, DistinctDegreeMatchesTrialDivision) {
  for (u64 p : {2, 3, 5}) {
    const PrimeField k(p);
    std::mt19937_64 rng(p);
    for (int t = 0; t < 60; ++t) {
      const FpPoly f = random_poly(k, rng, 1 + static_cast<unsigned>(rng() % 8));
      EXPECT_EQ(distinct_degree_factor(f), brute_factor_degrees(f)) << f.to_string();
    }
  }
}

TEST(Upoly, IrreducibleCountsMatchNecklaceFormula) {
  // number of monic irreducibles of degree 4 over F_3 is (81 - 9) / 4 = 18
  const PrimeField k(3);
  u64 count = 0;
  for (u64 t = 0; t < 81; ++t) count += is_irreducible(from_index(k, t, 4));
  EXPECT_EQ(count, 18u);
  const PrimeField k2(2);
  count = 0;
  for (u64 t = 0; t < 64; ++t) count += is_irreducible(from_index(k2, t, 6));
  EXPECT_EQ(count, 9u);
}

TEST(Upoly, SquarefreeDecompositionPthPowers) {
  const PrimeField k(3);
  const FpPoly x = FpPoly::x(k);
  const FpPoly a = x + FpPoly::constant(k, 1);
  const FpPoly b = x * x + FpPoly::constant(k, 1);
  const FpPoly f = a * a * a * b * b;
  auto dec = squarefree_decomposition(f);
  FpPoly back = FpPoly::constant(k, 1);
  for (auto& [g, e] : dec) {
    for (u64 i = 0; i < e; ++i) back = back * g;
  }
  EXPECT_EQ(back, f);
  EXPECT_EQ(distinct_degree_factor(f), (DegreeMultiset{{1, 3}, {2, 2}}));
}

TEST(Upoly, EqualDegreeSplitGivesIrreducibles) {
  for (u64 p : {2, 3, 7}) {
    const PrimeField k(p);
    std::mt19937_64 rng(p + 10);
    // F_2 has only two irreducible cubics
    const unsigned d = p == 2 ? 4 : 3;
    FpPoly f = FpPoly::constant(k, 1);
    u64 made = 0;
    while (made < 3) {
      const FpPoly g = random_poly(k, rng, d);
      if (!is_irreducible(g) || poly_gcd(f, g).degree() >= 1) continue;
      f = f * g;
      ++made;
    }
    const auto parts = equal_degree_split(f, d, 5);
    ASSERT_EQ(parts.size(), 3u);
    FpPoly back = FpPoly::constant(k, 1);
    for (const auto& g : parts) {
      EXPECT_TRUE(is_irreducible(g));
      back = back * g;
    }
    EXPECT_EQ(back, f.monic());
  }
}

TEST(Upoly, ExtensionFieldCoefficients) {
  const Field f = make_field(2, 2);
  const FieldElem w = f.x();
  // X^2 + X + 1 splits over F_4 as (X - w)(X - w^2)
  const FqPoly g(f, {f.one(), f.one(), f.one()});
  EXPECT_EQ(distinct_degree_factor(g), (DegreeMultiset{{1, 2}}));
  EXPECT_TRUE(g.eval(w).is_zero());
  EXPECT_TRUE(g.eval(w * w).is_zero());
}

TEST(Upoly, ShiftAndScale) {
  const PrimeField k(5);
  const FpPoly f = FpPoly::from_ints(k, {1, 2, 3, 4});
  for (u64 c = 0; c < 5; ++c) {
    const FpPoly s = shift_argument(f, c);
    const FpPoly t = scale_argument(f, c);
    for (u64 x = 0; x < 5; ++x) {
      EXPECT_EQ(s.eval(x), f.eval((x + c) % 5));
      EXPECT_EQ(t.eval(x), f.eval(x * c % 5));
    }
  }
}

TEST(Upoly, IntPolyArithmetic) {
  const IntPoly a{1, 2};
  const IntPoly b{-1, 0, 3};
  EXPECT_EQ((a * b).coeffs(), (std::vector<BigInt>{-1, -2, 3, 6}));
  EXPECT_EQ((a + b).coeffs(), (std::vector<BigInt>{0, 2, 3}));
  EXPECT_EQ(b.eval(10), 299);
  EXPECT_EQ(b.substitute_power(2).coeffs(), (std::vector<BigInt>{-1, 0, 0, 0, 3}));
  EXPECT_EQ(int_poly_mod_p(b, 3), FpPoly::from_ints(PrimeField(3), {2}));
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Upoly, DegreeMultisetJsonText) {
  DegreeMultiset d;
  d.add(1, 2);
  d.add(18);
  EXPECT_EQ(d.to_string(), "{\"1\":2,\"18\":1}");
  EXPECT_EQ(d.total_degree(), 20u);
  EXPECT_EQ(d.factor_count(), 3u);
}
