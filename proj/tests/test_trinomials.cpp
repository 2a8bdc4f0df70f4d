#include <gtest/gtest.h>

#include "fpt/trinomials.hpp"

using namespace fpt;

namespace {

// Product of (X - t) over the roots t of gamma_z in F_{p^d}, found by sweep.
FqPoly root_product(i64 z, u64 p, unsigned d) {
  const Field f = make_field(p, d);
  const FpPoly g = gamma(z, p);
  FqPoly acc = FqPoly::constant(f, f.one());
  for (const auto& x : enumerate_elements(f)) {
    if (eval_at(g, x).is_zero()) acc = acc * FqPoly(f, {-x, f.one()});
  }
  return acc;
}

}  // namespace

TEST(Trinomials, ClosedFormsMatchTransforms) {
  for (u64 p : {3, 5, 7, 11, 13}) {
    for (i64 z = 1; z < static_cast<i64>(p); ++z) {
      EXPECT_EQ(beta(z, p), beta_closed(z, p)) << z << " " << p;
      EXPECT_EQ(delta(z, p), delta_closed(z, p)) << z << " " << p;
    }
    EXPECT_EQ(gamma_bar(-4, p), gamma_bar_minus4_closed(p));
  }
}

TEST(Trinomials, GammaHasDistinctRoots) {
  for (u64 p : {3, 5, 7}) {
    for (i64 z = 1; z < static_cast<i64>(p); ++z) {
      const u64 m = alpha_zp(z, p).alpha;
      if (ipow(BigInt(p), static_cast<unsigned>(m)) > 1000000) continue;
      const FqPoly prod = root_product(z, p, static_cast<unsigned>(m));
      EXPECT_EQ(prod.degree(), static_cast<long>(p + 1)) << z << " " << p;
      EXPECT_EQ(static_cast<std::size_t>(prod.degree()), linear_roots(z, p).size() + gamma_bar(z, p).degree());
    }
  }
}

TEST(Trinomials, LinearRootsByBruteForce) {
  for (u64 p : {2, 3, 5, 7, 11}) {
    const PrimeField k(p);
    for (i64 z = 1; z < static_cast<i64>(p); ++z) {
      std::vector<u64> brute;
      for (u64 x = 0; x < p; ++x) {
        if (k.add(k.add(k.mul(x, x), k.mul(k.from_int(z + 2), x)), 1) == 0) brute.push_back(x);
      }
      EXPECT_EQ(linear_roots(z, p), brute);
    }
  }
}

TEST(Trinomials, GammaBarIsGammaWithoutLinearPart) {
  for (u64 p : {3, 5, 7, 11, 13, 19}) {
    for (i64 z = 1; z < static_cast<i64>(p); ++z) {
      const FpPoly gb = gamma_bar(z, p);
      const DegreeMultiset d = distinct_degree_factor(gb);
      EXPECT_EQ(d.count(1), 0u) << z << " " << p;
      const u64 m = alpha_zp(z, p).alpha;
      for (auto [deg, c] : d.counts()) EXPECT_EQ(deg, m);
    }
  }
}

TEST(Trinomials, Classification) {
  const auto c = classify_trinomial(1, 5, 19);
  EXPECT_EQ(c.zeta, 5u);
  EXPECT_EQ(*c.z, 4u);
  EXPECT_EQ(c.branch, TrinomialBranch::Nonsquare);
  EXPECT_EQ(classify_trinomial(1, 0, 7).branch, TrinomialBranch::ZetaZero);
  // zeta = -1/4 mod 7 is 5
  EXPECT_EQ(classify_trinomial(1, 5, 7).branch, TrinomialBranch::ZetaMinusQuarter);
  EXPECT_EQ(std::string(branch_name(TrinomialBranch::NonzeroSquare)), "nonzero-square");
  EXPECT_THROW(classify_trinomial(0, 1, 7), Error);
  EXPECT_THROW(classify_trinomial(1, 1, 2), Error);
}

TEST(Trinomials, PredictionMatchesFactorisation) {
  for (u64 p : {3, 5, 7, 11, 13}) {
    for (i64 a = 1; a < static_cast<i64>(p); ++a) {
      for (i64 b = 0; b < static_cast<i64>(p); ++b) {
        const auto v = verify_degrees(a, b, p);
        EXPECT_TRUE(v.match) << p << " " << a << " " << b;
        EXPECT_EQ(v.actual.total_degree(), p + 1);
      }
    }
  }
  EXPECT_EQ(predict_degrees(1, 0, 19), (DegreeMultiset{{1, 20}}));
  EXPECT_EQ(predict_degrees(1, 5, 19), (DegreeMultiset{{20, 1}}));
}

TEST(Trinomials, CharacteristicTwo) {
  EXPECT_THROW(predict_degrees(1, 1, 2), Error);
  const auto v = verify_degrees(1, 1, 2);
  EXPECT_FALSE(v.predicted.has_value());
  EXPECT_TRUE(v.match);
  EXPECT_TRUE(verify_degrees(1, 0, 2).match);
}

TEST(Trinomials, Frob2) {
  for (auto [z, p] : std::vector<std::pair<i64, u64>>{{1, 3}, {2, 3}, {1, 5}, {2, 5}, {3, 7}}) {
    const auto r = frob2_check(z, p);
    EXPECT_TRUE(r.passed()) << z << " " << p;
    EXPECT_EQ(r.roots, static_cast<u64>(gamma_bar(z, p).degree()));
  }
}

TEST(Trinomials, RootsLieInDistinctPlanes) {
  for (auto [z, p] : std::vector<std::pair<i64, u64>>{{1, 3}, {2, 3}, {1, 5}, {3, 5}, {6, 7}, {3, 7}}) {
    EXPECT_TRUE(roots_distinct_planes_check(z, p)) << z << " " << p;
  }
}

TEST(Trinomials, GenerateIrreducible) {
  for (auto [p, m] : std::vector<std::pair<u64, u64>>{{7, 3}, {7, 4}, {7, 6}, {7, 8}, {11, 5}, {11, 12}, {19, 9}, {19, 20}}) {
    const auto g = generate_irreducible(p, m);
    EXPECT_EQ(g.poly.degree(), static_cast<long>(m));
    EXPECT_TRUE(is_irreducible(g.poly));
    EXPECT_EQ(alpha_zp(static_cast<i64>(g.z), p).alpha, m);
    EXPECT_EQ(g.poly, generate_irreducible(p, m).poly);
  }
  EXPECT_THROW(generate_irreducible(7, 12), Error);
  EXPECT_THROW(generate_irreducible(7, 5), Error);
  EXPECT_THROW(generate_irreducible(7, 2), Error);
  EXPECT_THROW(generate_irreducible(2, 3), Error);
}
