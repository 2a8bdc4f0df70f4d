#include <gtest/gtest.h>

#include <set>

#include "fpt/zigzag.hpp"

using namespace fpt;

namespace {

// All 0/1 strings of length n passing the zigzag test, by filtering 2^n.
std::set<std::string> brute_zigzag(unsigned n, Orientation o) {
  std::set<std::string> out;
  for (u64 mask = 0; mask < (u64{1} << n); ++mask) {
    std::vector<std::uint8_t> bits(n);
    for (unsigned i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1u;
    bool ok = true;
    for (unsigned k = 0; k + 1 < n; ++k) {
      const bool down = (k % 2 == 0) == (o == Orientation::DownUp);
      if (down ? bits[k] < bits[k + 1] : bits[k] > bits[k + 1]) ok = false;
    }
    if (!ok) continue;
    std::string s;
    for (auto b : bits) s += static_cast<char>('0' + b);
    out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Zigzag, SignedFibonacci) {
  EXPECT_EQ(fib(10), 55);
  EXPECT_EQ(fib(0), 0);
  EXPECT_EQ(fib(-1), 1);
  EXPECT_EQ(fib(-2), -1);
  EXPECT_EQ(fib(-7), 13);
  EXPECT_EQ(fib(-10), -55);
  for (i64 n = -30; n <= 30; ++n) EXPECT_EQ(fib(n + 2), fib(n + 1) + fib(n));
}

TEST(Zigzag, EnumerationMatchesFilter) {
  for (auto o : {Orientation::DownUp, Orientation::UpDown}) {
    for (unsigned n = 0; n <= 14; ++n) {
      std::set<std::string> got;
      for (const auto& s : enum_zigzag(n, o)) {
        EXPECT_TRUE(is_zigzag(s));
        EXPECT_EQ(s.orientation, o);
        got.insert(s.to_string());
      }
      EXPECT_EQ(got, brute_zigzag(n, o)) << n;
      EXPECT_EQ(got.size(), static_cast<std::size_t>(fib(n + 2)));
    }
  }
}

TEST(Zigzag, SmallListsInOrder) {
  std::vector<std::string> du2;
  for (const auto& s : enum_zigzag(2, Orientation::DownUp)) du2.push_back(s.to_string());
  EXPECT_EQ(du2, (std::vector<std::string>{"11", "10", "00"}));
  EXPECT_EQ(enum_zigzag(0, Orientation::DownUp).size(), 1u);
  EXPECT_TRUE(enum_zigzag(0, Orientation::DownUp).front().bits.empty());
}

TEST(Zigzag, EnumerationRespectsBudget) {
  EXPECT_THROW(enum_zigzag(20, Orientation::DownUp, Budget{100}), Error);
  EXPECT_THROW(enum_zigzag(41, Orientation::DownUp), Error);
}

TEST(Zigzag, ValuesOfKnownSequences) {
  EXPECT_EQ(value_fib(ZigzagSeq::from_string("101010")), 12);
  EXPECT_EQ(value_fib(ZigzagSeq::from_string("111010")), 17);
  EXPECT_EQ(value_base(ZigzagSeq::from_string("10"), -3), -3);
  EXPECT_EQ(value_sfib(ZigzagSeq::from_positions({0, 5}, 6)), fib(-2) + fib(-7));
  EXPECT_THROW(ZigzagSeq::from_string("102"), Error);
  EXPECT_FALSE(is_zigzag(ZigzagSeq::from_string("011")));
}

TEST(Zigzag, ZeckendorfAgainstGreedyOracle) {
  EXPECT_EQ(zeckendorf(64), (std::vector<u64>{10, 6, 2}));
  for (u64 n = 1; n < 3000; ++n) {
    const auto idx = zeckendorf(n);
    BigInt sum = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      EXPECT_GE(idx[i], 2u);
      if (i) {
        EXPECT_GE(idx[i - 1], idx[i] + 2);
      }
      sum += fib(static_cast<i64>(idx[i]));
    }
    EXPECT_EQ(sum, n);
  }
  EXPECT_THROW(zeckendorf(0), Error);
}

TEST(Zigzag, NegafibonacciExamples) {
  EXPECT_EQ(signed_zeckendorf(12), (std::vector<i64>{-7, -2}));
  EXPECT_EQ(signed_zeckendorf(-43), (std::vector<i64>{-10, -7, -2}));
  EXPECT_TRUE(signed_zeckendorf(0).empty());
  for (i64 n = -2000; n <= 2000; ++n) {
    const auto idx = signed_zeckendorf(n);
    BigInt sum = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      EXPECT_LE(idx[i], -1);
      if (i) {
        EXPECT_LE(idx[i - 1] + 2, idx[i]);
      }
      sum += fib(idx[i]);
    }
    EXPECT_EQ(sum, n);
  }
}

TEST(Zigzag, DownUpRepresentationIsTheUniqueHit) {
  for (auto par : {Parity::Even, Parity::Odd}) {
    std::map<BigInt, std::string> table;
    const unsigned len = par == Parity::Even ? 10 : 11;
    for (const auto& s : enum_zigzag(len, Orientation::DownUp)) {
      ASSERT_FALSE(table.count(value_fib(s)));
      table[value_fib(s)] = s.to_string();
    }
    for (u64 n = 0; n < 89; ++n) {
      const ZigzagSeq r = to_downup(n, par);
      EXPECT_EQ(value_fib(r), n);
      EXPECT_TRUE(is_zigzag(r));
      EXPECT_EQ(r.size() % 2, par == Parity::Even ? 0u : 1u);
      // padding with leading zeros of the right parity reaches the table entry
      std::string padded(len - r.size(), '0');
      EXPECT_EQ(padded + r.to_string(), table[n]) << n;
    }
  }
  EXPECT_EQ(to_downup(12, Parity::Even).to_string(), "101010");
  EXPECT_THROW(to_downup(-1, Parity::Even), Error);
}

TEST(Zigzag, SignedDownUpSearch) {
  for (i64 n = -60; n <= 60; ++n) {
    const ZigzagSeq s = to_downup_sfib(n);
    EXPECT_EQ(value_sfib(s), n);
    EXPECT_TRUE(is_zigzag(s));
    if (n != 0) {
      EXPECT_EQ(s.bits.front(), 1);
    }
  }
}

TEST(Zigzag, UpDownMinimalLength) {
  for (u64 n = 0; n < 60; ++n) {
    for (auto par : {Parity::Even, Parity::Odd}) {
      const ZigzagSeq s = to_updown(n, par);
      EXPECT_EQ(value_fib(s), n);
      EXPECT_EQ(s.orientation, Orientation::UpDown);
      EXPECT_TRUE(is_zigzag(s));
      // no shorter sequence of the same parity works
      for (std::size_t len = par == Parity::Even ? 0 : 1; len < s.size(); len += 2) {
        for (const auto& t : enum_zigzag(static_cast<unsigned>(len), Orientation::UpDown)) EXPECT_NE(value_fib(t), n);
      }
    }
  }
  for (i64 n = -30; n <= 30; ++n) EXPECT_EQ(value_sfib(to_updown_sfib(n, Parity::Even)), n);
}
