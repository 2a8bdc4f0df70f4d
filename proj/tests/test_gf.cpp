#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fpt/gf.hpp"

using namespace fpt;

namespace {

// Irreducibility of a monic polynomial over F_p by trial of all monic
// divisors of degree <= deg/2, through schoolbook remainder.
bool brute_irreducible(const std::vector<u64>& f, u64 p) {
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= n; ++d) {
    u64 count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (u64 t = 0; t < count; ++t) {
      std::vector<u64> g(d + 1, 0);
      g[d] = 1;
      u64 r = t;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = r % p;
        r /= p;
      }
      std::vector<u64> a = f;
      for (std::size_t top = a.size(); top-- > d;) {
        const u64 c = a[top];
        if (!c) continue;
        for (unsigned i = 0; i <= d; ++i) a[top - d + i] = (a[top - d + i] + (p - c) * g[i]) % p;
      }
      bool zero = true;
      for (unsigned i = 0; i < d; ++i) zero = zero && a[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Gf, ModulusIsSmallestIrreducible) {
  for (auto [p, m] : std::vector<std::pair<u64, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 3}}) {
    const auto mod = Field::find_modulus(p, m);
    ASSERT_EQ(mod.size(), m + 1);
    EXPECT_EQ(mod.back(), 1u);
    EXPECT_TRUE(brute_irreducible(mod, p));
    // every smaller monic candidate is reducible
    u64 idx = 0, w = 1;
    for (unsigned i = 0; i < m; ++i, w *= p) idx += mod[i] * w;
    for (u64 t = 0; t < idx; ++t) {
      std::vector<u64> g(m + 1, 0);
      g[m] = 1;
      u64 r = t;
      for (unsigned i = 0; i < m; ++i) {
        g[i] = r % p;
        r /= p;
      }
      EXPECT_FALSE(brute_irreducible(g, p)) << p << "^" << m << " candidate " << t;
    }
  }
  EXPECT_EQ(Field::find_modulus(2, 2), (std::vector<u64>{1, 1, 1}));
}

TEST(Gf, FieldAxiomsExhaustiveSmall) {
  const Field f = make_field(3, 2);
  const auto all = enumerate_elements(f);
  ASSERT_EQ(all.size(), 9u);
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a - b) + b, a);
      if (!b.is_zero()) {
        EXPECT_EQ(a / b * b, a);
      }
      for (const auto& c : all) EXPECT_EQ(a * (b + c), a * b + a * c);
    }
  }
}

TEST(Gf, IndexRoundTrip) {
  const Field f = make_field(5, 3);
  for (u64 i = 0; i < f.q(); ++i) EXPECT_EQ(f.from_index(i).index(), i);
}

TEST(Gf, FrobeniusIsPthPower) {
  const Field f = make_field(3, 4);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const FieldElem x = f.random(rng);
    EXPECT_EQ(x.frobenius(1), x.pow(u64{3}));
    EXPECT_EQ(x.frobenius(4), x);
    EXPECT_EQ(x.frobenius(2), x.pow(u64{9}));
  }
}

TEST(Gf, PrimeSubfieldAndSubfields) {
  const Field f = make_field(2, 6);
  u64 prime = 0, sub2 = 0, sub3 = 0;
  for (const auto& x : enumerate_elements(f)) {
    prime += x.in_prime_field();
    sub2 += in_subfield(x, 2);
    sub3 += in_subfield(x, 3);
  }
  EXPECT_EQ(prime, 2u);
  EXPECT_EQ(sub2, 4u);
  EXPECT_EQ(sub3, 8u);
}

TEST(Gf, MultiplicativeOrders) {
  const Field f = make_field(3, 3);
  std::map<u64, u64> hist;
  for (const auto& x : enumerate_elements(f)) {
    if (x.is_zero()) continue;
    u64 o = 1;
    FieldElem y = x;
    while (!y.is_one()) {
      y = y * x;
      ++o;
    }
    EXPECT_EQ(mult_order(x), o);
    ++hist[o];
  }
  // cyclic group of order 26
  EXPECT_EQ(hist[1], 1u);
  EXPECT_EQ(hist[2], 1u);
  EXPECT_EQ(hist[13], 12u);
  EXPECT_EQ(hist[26], 12u);
  EXPECT_EQ(mult_order(primitive_element(f)), 26u);
}

TEST(Gf, SqrtInOddCharacteristic) {
  const Field f = make_field(7, 2);
  u64 squares = 0;
  for (const auto& x : enumerate_elements(f)) {
    const auto s = sqrt(x);
    const bool euler = x.is_zero() || x.pow(u64{24}).is_one();
    EXPECT_EQ(s.has_value(), euler);
    if (s) {
      EXPECT_EQ(*s * *s, x);
      ++squares;
    }
  }
  EXPECT_EQ(squares, 25u);
  // every element of F_7 is a square in F_49
  for (i64 a = 0; a < 7; ++a) EXPECT_TRUE(sqrt(f.from_int(a)).has_value());
}

TEST(Gf, Errors) {
  EXPECT_THROW(make_field(4, 2), Error);
  EXPECT_THROW(make_field(3, 0), Error);
  const Field f = make_field(3, 2);
  EXPECT_THROW(f.zero().inv(), Error);
  EXPECT_THROW(f.one() + make_field(3, 3).one(), Error);
  EXPECT_THROW(f.x().to_prime(), Error);
}
