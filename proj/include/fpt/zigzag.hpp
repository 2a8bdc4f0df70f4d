#pragma once

// Down/up and up/down 0/1 sequences, Fibonacci-type values, and the unique
// representation algorithms built on them.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpt/budget.hpp"
#include "fpt/error.hpp"
#include "fpt/nt.hpp"

namespace fpt {

/// Fib(n) for every integer n, with Fib(-n) = (-1)^(n+1) Fib(n).
inline BigInt fib(i64 n) {
  const u64 a = n < 0 ? static_cast<u64>(-n) : static_cast<u64>(n);
  BigInt x = 0, y = 1;
  for (u64 i = 0; i < a; ++i) {
    BigInt t = x + y;
    x = std::move(y);
    y = std::move(t);
  }
  if (n < 0 && a % 2 == 0) x = -x;
  return x;
}

/// Signed Fibonacci numbers Fib(k) for k in [-K, K].
class FibCache {
 public:
  explicit FibCache(u64 k) : k_(static_cast<i64>(k)), v_(2 * k + 1) {
    require(k >= 2, Errc::NegativeIndex, "cache radius too small");
    v_[idx(0)] = 0;
    v_[idx(1)] = 1;
    for (i64 n = 2; n <= k_; ++n) v_[idx(n)] = v_[idx(n - 1)] + v_[idx(n - 2)];
    for (i64 n = -1; n >= -k_; --n) v_[idx(n)] = v_[idx(n + 2)] - v_[idx(n + 1)];
  }
  i64 radius() const { return k_; }
  const BigInt& operator()(i64 n) const {
    require(n >= -k_ && n <= k_, Errc::BudgetExceeded, "Fibonacci index outside cache");
    return v_[idx(n)];
  }

 private:
  std::size_t idx(i64 n) const { return static_cast<std::size_t>(n + k_); }
  i64 k_;
  std::vector<BigInt> v_;
};

enum class Orientation { DownUp, UpDown };
enum class Parity { Even, Odd };

inline const char* orientation_name(Orientation o) { return o == Orientation::DownUp ? "down-up" : "up-down"; }

/// 0/1 sequence stored most significant first: bits[0] is eps_{n-1}.
struct ZigzagSeq {
  std::vector<std::uint8_t> bits;
  Orientation orientation = Orientation::DownUp;

  std::size_t size() const { return bits.size(); }
  /// eps_i, counted from the least significant end.
  std::uint8_t eps(std::size_t i) const { return bits[bits.size() - 1 - i]; }

  std::string to_string() const {
    std::string s;
    for (auto b : bits) s += static_cast<char>('0' + b);
    return s;
  }

  static ZigzagSeq from_string(std::string_view s, Orientation o = Orientation::DownUp) {
    ZigzagSeq z;
    z.orientation = o;
    for (char c : s) {
      require(c == '0' || c == '1', Errc::NonBinaryEntry, "sequence entries must be 0 or 1");
      z.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return z;
  }

  /// Sequence with ones exactly at the given eps-positions.
  static ZigzagSeq from_positions(const std::vector<std::size_t>& ones, std::size_t length, Orientation o = Orientation::DownUp) {
    ZigzagSeq z;
    z.orientation = o;
    z.bits.assign(length, 0);
    for (auto i : ones) {
      require(i < length, Errc::BadParameter, "position beyond length");
      z.bits[length - 1 - i] = 1;
    }
    return z;
  }

  friend bool operator==(const ZigzagSeq&, const ZigzagSeq&) = default;
};

inline bool is_zigzag(const std::vector<std::uint8_t>& bits, Orientation o) {
  for (auto b : bits) require(b <= 1, Errc::NonBinaryEntry, "sequence entries must be 0 or 1");
  for (std::size_t k = 0; k + 1 < bits.size(); ++k) {
    const bool down = (k % 2 == 0) == (o == Orientation::DownUp);
    if (down ? bits[k] < bits[k + 1] : bits[k] > bits[k + 1]) return false;
  }
  return true;
}

inline bool is_zigzag(const ZigzagSeq& s) { return is_zigzag(s.bits, s.orientation); }

namespace detail {

inline void append(std::vector<ZigzagSeq>& out, const std::vector<ZigzagSeq>& src, std::string_view tail) {
  for (const auto& s : src) {
    ZigzagSeq t = s;
    for (char c : tail) t.bits.push_back(static_cast<std::uint8_t>(c - '0'));
    out.push_back(std::move(t));
  }
}

inline std::vector<ZigzagSeq> enum_downup(unsigned n) {
  std::vector<ZigzagSeq> prev2{ZigzagSeq{}};
  if (n == 0) return prev2;
  std::vector<ZigzagSeq> prev1{ZigzagSeq::from_string("1"), ZigzagSeq::from_string("0")};
  for (unsigned k = 2; k <= n; ++k) {
    std::vector<ZigzagSeq> cur;
    cur.reserve(prev1.size() + prev2.size());
    if (k % 2 == 0) {
      append(cur, prev2, "11");
      append(cur, prev1, "0");
    } else {
      append(cur, prev1, "1");
      append(cur, prev2, "00");
    }
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

}  // namespace detail

inline constexpr unsigned kMaxZigzagLength = 40;

/// All zigzag sequences of length n, Fib(n+2) of them.
inline std::vector<ZigzagSeq> enum_zigzag(unsigned n, Orientation o, const Budget& budget = Budget::from_env()) {
  require(n <= kMaxZigzagLength, Errc::BudgetExceeded, "zigzag length above 40");
  budget.check(fib(static_cast<i64>(n) + 2), "zigzag enumeration");
  auto out = detail::enum_downup(n);
  if (o == Orientation::UpDown) {
    for (auto& s : out) {
      s.orientation = Orientation::UpDown;
      for (auto& b : s.bits) b ^= 1;
    }
  }
  return out;
}

/// Sum of eps_i * b^i.
inline BigInt value_base(const ZigzagSeq& s, const BigInt& b) {
  BigInt acc = 0;
  for (auto bit : s.bits) acc = acc * b + bit;
  return acc;
}

/// Sum of eps_i * Fib(i+1).
inline BigInt value_fib(const ZigzagSeq& s) {
  BigInt acc = 0;
  BigInt f = 1, g = 1;  // Fib(i+1), Fib(i+2)
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.eps(i)) acc += f;
    BigInt t = f + g;
    f = std::move(g);
    g = std::move(t);
  }
  return acc;
}

/// Sum of eps_i * Fib(-i-2).
inline BigInt value_sfib(const ZigzagSeq& s) {
  BigInt acc = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.eps(i)) acc += fib(-static_cast<i64>(i) - 2);
  }
  return acc;
}

/// Zeckendorf representation: Fibonacci indices k >= 2, descending,
/// pairwise non-consecutive, with sum Fib(k) = n.
inline std::vector<u64> zeckendorf(const BigInt& n) {
  require(n >= 1, Errc::NonPositive, "zeckendorf needs n >= 1");
  std::vector<BigInt> fs{0, 1};
  while (fs.back() <= n) fs.push_back(fs[fs.size() - 1] + fs[fs.size() - 2]);
  std::vector<u64> out;
  BigInt rest = n;
  for (std::size_t k = fs.size() - 1; k >= 2 && rest > 0; --k) {
    if (fs[k] <= rest) {
      out.push_back(k);
      rest -= fs[k];
      --k;
    }
  }
  return out;
}

/// Signed (negafibonacci) representation: indices -k, k >= 1, descending in
/// |k|, pairwise non-consecutive, with sum Fib(-k) = n. Empty for n = 0.
inline std::vector<i64> signed_zeckendorf(const BigInt& n) {
  // lo[k], hi[k]: extreme sums using indices 1..k
  std::vector<BigInt> lo{0}, hi{0};
  auto extend = [&] {
    const i64 k = static_cast<i64>(lo.size());
    const BigInt f = fib(-k);
    lo.push_back(lo.back() + (f < 0 ? f : BigInt(0)));
    hi.push_back(hi.back() + (f > 0 ? f : BigInt(0)));
  };
  while (!(lo.back() <= n && n <= hi.back())) extend();
  std::vector<i64> out;
  BigInt rest = n;
  i64 k = static_cast<i64>(lo.size()) - 1;
  while (rest != 0) {
    require(k >= 1, Errc::InternalConsistency, "negafibonacci greedy ran out of indices");
    if (lo[static_cast<std::size_t>(k - 1)] <= rest && rest <= hi[static_cast<std::size_t>(k - 1)]) {
      --k;
      continue;
    }
    out.push_back(-k);
    rest -= fib(-k);
    k -= 2;
  }
  return out;
}

/// Length of the Zeckendorf representation of |n| as a 0/1 string.
inline std::size_t zeckendorf_length(const BigInt& n) {
  const BigInt a = n < 0 ? BigInt(-n) : n;
  if (a == 0) return 0;
  return static_cast<std::size_t>(zeckendorf(a).front() - 1);
}

/// Default search window for the search-based representations.
inline std::size_t search_window(const BigInt& n) { return 2 * zeckendorf_length(n) + 6; }

namespace detail {

// Length-L zigzag sequences of orientation o with sum eps_i * w[i] = target.
class WeightedSearch {
 public:
  WeightedSearch(std::size_t len, Orientation o, std::vector<BigInt> w, bool leading_one)
      : len_(len), o_(o), w_(std::move(w)), leading_one_(leading_one), pos_below_(len + 1, 0), neg_below_(len + 1, 0) {
    for (std::size_t i = 0; i < len_; ++i) {
      pos_below_[i + 1] = pos_below_[i] + (w_[i] > 0 ? w_[i] : BigInt(0));
      neg_below_[i + 1] = neg_below_[i] + (w_[i] < 0 ? w_[i] : BigInt(0));
    }
  }

  std::vector<ZigzagSeq> run(const BigInt& target, std::size_t cap) {
    hits_.clear();
    cap_ = cap;
    cur_.assign(len_, 0);
    dfs(0, target);
    return hits_;
  }

 private:
  // k: next MSB-first slot; eps index is len-1-k
  void dfs(std::size_t k, const BigInt& rest) {
    if (hits_.size() >= cap_) return;
    const std::size_t remaining = len_ - k;
    if (rest < neg_below_[remaining] || rest > pos_below_[remaining]) return;
    if (k == len_) {
      if (rest == 0) hits_.push_back(ZigzagSeq{cur_, o_});
      return;
    }
    for (std::uint8_t b : {std::uint8_t{1}, std::uint8_t{0}}) {
      if (k == 0 && leading_one_ && b == 0) continue;
      if (k > 0) {
        const bool down = ((k - 1) % 2 == 0) == (o_ == Orientation::DownUp);
        if (down ? cur_[k - 1] < b : cur_[k - 1] > b) continue;
      }
      cur_[k] = b;
      dfs(k + 1, b ? BigInt(rest - w_[remaining - 1]) : rest);
    }
    cur_[k] = 0;
  }

  std::size_t len_;
  Orientation o_;
  std::vector<BigInt> w_;
  bool leading_one_;
  std::vector<BigInt> pos_below_, neg_below_;
  std::vector<std::uint8_t> cur_;
  std::vector<ZigzagSeq> hits_;
  std::size_t cap_ = 2;
};

inline std::vector<BigInt> fib_weights(std::size_t len) {
  std::vector<BigInt> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(fib(static_cast<i64>(i) + 1));
  return w;
}

inline std::vector<BigInt> sfib_weights(std::size_t len) {
  std::vector<BigInt> w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(fib(-static_cast<i64>(i) - 2));
  return w;
}

inline std::vector<ZigzagSeq> search(std::size_t len, Orientation o, bool signed_weights, bool leading_one, const BigInt& n,
                                     std::size_t cap = 2) {
  WeightedSearch s(len, o, signed_weights ? sfib_weights(len) : fib_weights(len), leading_one);
  return s.run(n, cap);
}

// Shortest length of the given parity whose zigzag set represents n.
inline ZigzagSeq search_min_length(const BigInt& n, Parity parity, Orientation o, bool signed_weights) {
  const std::size_t window = search_window(n);
  for (std::size_t len = parity == Parity::Even ? 0 : 1; len <= window; len += 2) {
    auto hits = search(len, o, signed_weights, false, n);
    if (hits.empty()) continue;
    require(hits.size() == 1, Errc::InternalConsistency, "representation of length " + std::to_string(len) + " is not unique");
    return hits.front();
  }
  fail(Errc::SearchWindowExhausted, "no representation of " + n.str() + " within length " + std::to_string(window));
}

}  // namespace detail

/// Unique down/up sequence of the requested length parity with value_fib = n,
/// of minimal length.
inline ZigzagSeq to_downup(const BigInt& n, Parity parity) {
  require(n >= 0, Errc::NegativeInput, "to_downup needs n >= 0");
  std::size_t len = parity == Parity::Even ? 0 : 1;
  while (fib(static_cast<i64>(len) + 2) <= n) len += 2;
  ZigzagSeq out;
  BigInt rest = n;
  std::size_t l = len;
  while (l >= 2) {
    const BigInt fl = fib(static_cast<i64>(l));
    if (rest < fl) {
      out.bits.insert(out.bits.end(), {0, 0});
    } else if (rest < 2 * fl) {
      out.bits.insert(out.bits.end(), {1, 0});
      rest -= fl;
    } else {
      out.bits.insert(out.bits.end(), {1, 1});
      rest -= fib(static_cast<i64>(l) + 1);
    }
    l -= 2;
  }
  if (l == 1) {
    require(rest <= 1, Errc::InternalConsistency, "interval descent left a remainder");
    out.bits.push_back(static_cast<std::uint8_t>(rest));
  } else {
    require(rest == 0, Errc::InternalConsistency, "interval descent left a remainder");
  }
  return out;
}

/// Unique down/up sequence with leading 1 (empty for 0) whose signed
/// Fibonacci value is n; uniqueness is checked across the whole window.
inline ZigzagSeq to_downup_sfib(const BigInt& n) {
  if (n == 0) return ZigzagSeq{};
  const std::size_t window = search_window(n);
  std::vector<ZigzagSeq> found;
  for (std::size_t len = 1; len <= window; ++len) {
    for (auto& s : detail::search(len, Orientation::DownUp, true, true, n)) found.push_back(std::move(s));
    require(found.size() <= 1, Errc::InternalConsistency, "signed representation of " + n.str() + " is not unique");
  }
  if (found.empty()) fail(Errc::SearchWindowExhausted, "no signed representation of " + n.str() + " within length " + std::to_string(window));
  return found.front();
}

/// Shortest up/down sequence of the requested parity with value_fib = n.
inline ZigzagSeq to_updown(const BigInt& n, Parity parity) {
  require(n >= 0, Errc::NegativeInput, "to_updown needs n >= 0");
  return detail::search_min_length(n, parity, Orientation::UpDown, false);
}

/// Shortest up/down sequence of the requested parity with value_sfib = n.
inline ZigzagSeq to_updown_sfib(const BigInt& n, Parity parity) {
  return detail::search_min_length(n, parity, Orientation::UpDown, true);
}

}  // namespace fpt
