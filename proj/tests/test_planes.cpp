#include <gtest/gtest.h>

#include <set>

#include "fpt/planes.hpp"

using namespace fpt;

namespace {

// Planes as sets of element indices, by closing every pair under F_p-span.
std::set<std::vector<u64>> brute_planes(const Field& f) {
  std::set<std::vector<u64>> out;
  const auto all = enumerate_elements(f);
  for (const auto& x : all) {
    for (const auto& y : all) {
      std::set<u64> span;
      for (u64 a = 0; a < f.p(); ++a) {
        for (u64 b = 0; b < f.p(); ++b) {
          span.insert((f.from_int(static_cast<i64>(a)) * x + f.from_int(static_cast<i64>(b)) * y).index());
        }
      }
      if (span.size() == f.p() * f.p()) out.insert(std::vector<u64>(span.begin(), span.end()));
    }
  }
  return out;
}

std::vector<u64> indices(const Plane& P) {
  std::set<u64> s;
  for (const auto& e : plane_elements(P)) s.insert(e.index());
  return {s.begin(), s.end()};
}

}  // namespace

TEST(Planes, EnumerationMatchesSpanClosure) {
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 4}, {3, 3}}) {
    const Field f = make_field(p, m);
    std::set<std::vector<u64>> got;
    for (const auto& P : enumerate_planes(f)) got.insert(indices(P));
    EXPECT_EQ(got, brute_planes(f));
    EXPECT_EQ(BigInt(got.size()), plane_count_formula(p, m));
  }
}

TEST(Planes, CanonicalBasis) {
  const Field f = make_field(3, 3);
  const FieldElem x = f.x(), y = f.one();
  const Plane a = canonical_plane(x, y);
  const Plane b = canonical_plane(x + y, x - y);
  EXPECT_EQ(a, b);
  EXPECT_TRUE(plane_contains(a, x + x + y));
  EXPECT_FALSE(plane_contains(a, x * x));
  EXPECT_THROW(canonical_plane(x, x + x), Error);
}

TEST(Planes, OrbitCensus) {
  const auto r = orbit_count(3, 6);
  EXPECT_EQ(r.planes, 11011u);
  EXPECT_EQ(r.orbits, 31u);
  EXPECT_EQ(r.formula, 31);
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {5, 3}, {5, 4}}) {
    const auto s = orbit_count(p, m);
    EXPECT_EQ(BigInt(s.orbits), s.formula) << p << "^" << m;
    EXPECT_EQ(BigInt(s.planes), plane_count_formula(p, m));
  }
}

TEST(Planes, PlaneBudgetRefuses) { EXPECT_THROW(orbit_count(3, 6, Budget{1000}), Error); }

TEST(Planes, ZValuesAgreeAcrossModes) {
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {2, 5}, {3, 3}, {3, 4}, {5, 3}}) {
    const Field f = make_field(p, m);
    const auto quick = z_values(f);
    const auto full = z_values(f, true);
    EXPECT_EQ(quick.all, full.all);
    EXPECT_EQ(quick.contains_zero(), m % 2 == 0);
    // one nu-value per orbit
    EXPECT_EQ(BigInt(quick.all.size()), orbit_count_formula(p, m));
  }
}

TEST(Planes, Pencils) {
  const Field f = make_field(3, 3);
  const auto zs = z_values(f);
  for (i64 z = 1; z < 3; ++z) {
    if (eval_fp(3, f.from_int(z)).is_zero()) {
      const auto pc = pencil(f.from_int(z));
      EXPECT_EQ(pc.planes.size(), 4u);
      EXPECT_EQ(pc.points.size(), 24u);
    } else {
      EXPECT_THROW(pencil(f.from_int(z)), Error);
    }
  }
  const Field g = make_field(3, 4);
  const auto zero = pencil(g.zero());
  EXPECT_EQ(zero.planes.size(), 1u);
  EXPECT_THROW(pencil(g.x()), Error);
  EXPECT_THROW(pencil(f.zero()), Error);
}

TEST(Planes, OracleMatchesRecursion) {
  for (auto [p, mmax] : std::vector<std::pair<u64, unsigned>>{{2, 12}, {3, 7}, {5, 5}, {7, 4}}) {
    const PrimeField k(p);
    for (unsigned m = 2; m <= mmax; ++m) {
      EXPECT_EQ(oracle_fmp(make_field(p, m)), to_dense(build_recursive(m, p), k)) << p << " " << m;
    }
  }
}
