#pragma once

// Arithmetic in F_p and F_{p^m}.
//
// F_{p^m} is realised as F_p[X]/(f) where f is the monic irreducible of
// degree m whose coefficient vector, read as a base-p integer with the
// constant term as least significant digit, is smallest. Elements are
// coefficient vectors of residues, constant term first.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fpt/budget.hpp"
#include "fpt/error.hpp"
#include "fpt/nt.hpp"

namespace fpt {

inline constexpr u64 kMaxCharacteristic = u64{1} << 20;

/// The prime field F_p as a coefficient context over machine residues.
class PrimeField {
 public:
  using value_type = u64;

  PrimeField() = default;
  explicit PrimeField(u64 p) : p_(p) {
    require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
    require(p <= kMaxCharacteristic, Errc::BudgetExceeded, "characteristic above 2^20");
  }

  u64 p() const { return p_; }
  u64 characteristic() const { return p_; }
  unsigned degree() const { return 1; }
  BigInt order() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(i64 v) const { return mod_i64(v, p_); }
  value_type from_big(const BigInt& v) const { return mod_u64(v, p_); }

  value_type add(value_type a, value_type b) const { return (a + b) % p_; }
  value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const { return a * b % p_; }
  value_type inv(value_type a) const { return nt::inv_mod(a, p_); }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }
  value_type pow(value_type a, const BigInt& e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    BigInt r = e % (p_ - 1);
    if (r < 0) r += p_ - 1;
    return nt::powmod(a, static_cast<u64>(r), p_);
  }
  value_type pth_root(value_type a) const { return a; }
  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  u64 index(value_type a) const { return a; }
  value_type from_index(u64 i) const { return i % p_; }
  template <class Rng>
  value_type random(Rng& rng) const {
    return std::uniform_int_distribution<u64>(0, p_ - 1)(rng);
  }
  std::string to_string(value_type a) const { return std::to_string(a); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  u64 p_ = 2;
};

namespace detail {

// Dense polynomials over F_p on raw residue vectors, constant term first.
// Only what the field construction itself needs; the general machinery
// lives in upoly.hpp.
using RawPoly = std::vector<u64>;

inline void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline RawPoly raw_mod(RawPoly a, const RawPoly& f, u64 p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const u64 lead_inv = nt::inv_mod(f.back(), p);
  while (a.size() > n) {
    const u64 t = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + (p - f[j]) * t) % p;
    trim(a);
  }
  return a;
}

inline RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return raw_mod(std::move(r), f, p);
}

inline RawPoly raw_powmod(RawPoly a, BigInt e, const RawPoly& f, u64 p) {
  RawPoly r = raw_mod({1}, f, p);
  a = raw_mod(std::move(a), f, p);
  while (e > 0) {
    if ((e & 1) != 0) r = raw_mulmod(r, a, f, p);
    a = raw_mulmod(a, a, f, p);
    e >>= 1;
  }
  return r;
}

inline RawPoly raw_sub(RawPoly a, const RawPoly& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline RawPoly raw_gcd(RawPoly a, RawPoly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = raw_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

/// Rabin's irreducibility test for a monic f over F_p.
inline bool raw_is_irreducible(const RawPoly& f, u64 p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const RawPoly x{0, 1};
  auto frob_iter = [&](std::size_t k) {
    RawPoly h = raw_mod(x, f, p);
    for (std::size_t i = 0; i < k; ++i) h = raw_powmod(h, p, f, p);
    return h;
  };
  if (raw_sub(frob_iter(n), raw_mod(x, f, p), p).size() != 0) return false;
  for (auto [r, e] : nt::factor(n)) {
    RawPoly g = raw_gcd(f, raw_sub(frob_iter(n / r), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct FieldData {
  PrimeField base;
  u64 p = 0;
  unsigned m = 0;
  u64 q = 0;                             // p^m
  std::vector<u64> modulus;              // m+1 coefficients, monic
  std::vector<std::vector<u64>> frob;    // row i = X^(p*i) mod modulus
  std::map<u64, unsigned> group_order_factors;  // factorisation of q-1
};

}  // namespace detail

class FieldElem;

/// Field descriptor for F_{p^m}. Immutable; cheap to copy.
class Field {
 public:
  using value_type = FieldElem;

  Field() = default;

  static Field make(u64 p, unsigned m) {
    require(m >= 1, Errc::DegreeZero, "extension degree must be >= 1");
    PrimeField base(p);
    require(BigInt(m) * boost::multiprecision::msb(BigInt(p)) < 64 && ipow(BigInt(p), m) <= (BigInt(1) << 63),
            Errc::BudgetExceeded, "p^m above 2^63");
    auto d = std::make_shared<detail::FieldData>();
    d->base = base;
    d->p = p;
    d->m = m;
    d->q = static_cast<u64>(ipow(BigInt(p), m));
    d->modulus = find_modulus(p, m);
    d->group_order_factors = nt::factor(d->q - 1);
    // Frobenius rows X^(p*i) mod f.
    const detail::RawPoly x{0, 1};
    const detail::RawPoly xp = detail::raw_powmod(x, p, d->modulus, p);
    detail::RawPoly row = detail::raw_mod({1}, d->modulus, p);
    for (unsigned i = 0; i < m; ++i) {
      detail::RawPoly padded = row;
      padded.resize(m, 0);
      d->frob.push_back(padded);
      row = detail::raw_mulmod(row, xp, d->modulus, p);
    }
    return Field(std::move(d));
  }

  /// Lexicographically smallest monic irreducible of degree m over F_p
  /// (coefficient vector compared as a base-p integer, constant term least
  /// significant). Degree 1 gives X.
  static std::vector<u64> find_modulus(u64 p, unsigned m) {
    if (m == 1) return {0, 1};
    const u64 count = static_cast<u64>(ipow(BigInt(p), m));
    for (u64 idx = 0; idx < count; ++idx) {
      detail::RawPoly f(m + 1, 0);
      u64 rest = idx;
      for (unsigned i = 0; i < m; ++i) {
        f[i] = rest % p;
        rest /= p;
      }
      f[m] = 1;
      if (detail::raw_is_irreducible(f, p)) return f;
    }
    fail(Errc::InternalConsistency, "no irreducible polynomial found");
  }

  u64 p() const { return d_->p; }
  u64 characteristic() const { return d_->p; }
  unsigned m() const { return d_->m; }
  unsigned degree() const { return d_->m; }
  u64 q() const { return d_->q; }
  BigInt order() const { return d_->q; }
  const std::vector<u64>& modulus() const { return d_->modulus; }
  const PrimeField& prime_field() const { return d_->base; }
  const std::map<u64, unsigned>& group_order_factors() const { return d_->group_order_factors; }
  const std::shared_ptr<const detail::FieldData>& data() const { return d_; }

  FieldElem elem(std::vector<u64> coeffs) const;
  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(i64 v) const;
  FieldElem from_big(const BigInt& v) const;
  /// The class of X (a generator of F_{p^m} over F_p when m > 1).
  FieldElem x() const;
  FieldElem from_index(u64 idx) const;

  // Coefficient-context interface used by Poly<Field>; defined below.
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const;
  FieldElem pow(const FieldElem& a, const BigInt& e) const;
  FieldElem pth_root(const FieldElem& a) const;
  bool is_zero(const FieldElem& a) const;
  bool equal(const FieldElem& a, const FieldElem& b) const;
  u64 index(const FieldElem& a) const;
  template <class Rng>
  FieldElem random(Rng& rng) const;
  std::string to_string(const FieldElem& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.d_ == b.d_ || (a.d_->p == b.d_->p && a.d_->modulus == b.d_->modulus);
  }

 private:
  friend class FieldElem;
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::FieldData> d_;
};

/// Element of F_{p^m}; carries a handle to its field.
class FieldElem {
 public:
  FieldElem() = default;

  const std::vector<u64>& coeffs() const { return c_; }
  const Field& field() const { return f_; }
  const std::shared_ptr<const detail::FieldData>& data() const { return f_.d_; }

  bool is_zero() const {
    for (u64 v : c_) {
      if (v != 0) return false;
    }
    return true;
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }
  bool in_prime_field() const {
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] != 0) return false;
    }
    return true;
  }
  /// The residue of an element of the prime subfield.
  u64 to_prime() const {
    require(in_prime_field(), Errc::NotPrimeFieldElement, "element " + to_string() + " is not in F_p");
    return c_.empty() ? 0 : c_[0];
  }
  /// Base-p integer encoding, constant coefficient least significant.
  u64 index() const {
    u64 idx = 0;
    for (std::size_t i = c_.size(); i-- > 0;) idx = idx * d().p + c_[i];
    return idx;
  }

  FieldElem inv() const;
  FieldElem pow(u64 e) const;
  FieldElem pow(const BigInt& e) const;
  FieldElem frobenius(u64 k = 1) const;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + "]";
  }

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inv(); }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    check_same(a, b);
    return a.c_ == b.c_;
  }
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

 private:
  friend class Field;
  FieldElem(std::shared_ptr<const detail::FieldData> d, std::vector<u64> c) : f_(std::move(d)), c_(std::move(c)) {}

  static void check_same(const FieldElem& a, const FieldElem& b) {
    if (a.f_.d_ == b.f_.d_) return;
    if (a.f_.d_ && b.f_.d_ && a.f_ == b.f_) return;
    fail(Errc::FieldMismatch, "operands belong to different fields");
  }

  const detail::FieldData& d() const { return *f_.d_; }

  Field f_;
  std::vector<u64> c_;
};


// ---------------------------------------------------------------------------
// Field members that need the complete FieldElem type

inline FieldElem Field::elem(std::vector<u64> coeffs) const {
  require(coeffs.size() <= d_->m, Errc::FieldMismatch, "too many coefficients for F_{p^m}");
  coeffs.resize(d_->m, 0);
  for (u64& c : coeffs) c %= d_->p;
  return FieldElem(d_, std::move(coeffs));
}

inline FieldElem Field::zero() const { return FieldElem(d_, std::vector<u64>(d_->m, 0)); }

inline FieldElem Field::one() const { return from_int(1); }

inline FieldElem Field::from_int(i64 v) const {
  std::vector<u64> c(d_->m, 0);
  c[0] = mod_i64(v, d_->p);
  return FieldElem(d_, std::move(c));
}

inline FieldElem Field::from_big(const BigInt& v) const { return from_int(static_cast<i64>(mod_u64(v, d_->p))); }

inline FieldElem Field::x() const {
  if (d_->m == 1) return FieldElem(d_, {(d_->p - d_->modulus[0]) % d_->p});
  std::vector<u64> c(d_->m, 0);
  c[1] = 1;
  return FieldElem(d_, std::move(c));
}

inline FieldElem Field::from_index(u64 idx) const {
  std::vector<u64> c(d_->m, 0);
  for (unsigned i = 0; i < d_->m; ++i) {
    c[i] = idx % d_->p;
    idx /= d_->p;
  }
  return FieldElem(d_, std::move(c));
}

inline FieldElem Field::add(const FieldElem& a, const FieldElem& b) const { return a + b; }
inline FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const { return a - b; }
inline FieldElem Field::neg(const FieldElem& a) const { return -a; }
inline FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const { return a * b; }
inline FieldElem Field::inv(const FieldElem& a) const { return a.inv(); }
inline FieldElem Field::div(const FieldElem& a, const FieldElem& b) const { return a / b; }
inline FieldElem Field::pow(const FieldElem& a, const BigInt& e) const { return a.pow(e); }
inline FieldElem Field::pth_root(const FieldElem& a) const { return a.frobenius(d_->m - 1); }
inline bool Field::is_zero(const FieldElem& a) const { return a.is_zero(); }
inline bool Field::equal(const FieldElem& a, const FieldElem& b) const { return a == b; }
inline u64 Field::index(const FieldElem& a) const { return a.index(); }
inline std::string Field::to_string(const FieldElem& a) const { return a.to_string(); }
template <class Rng>
FieldElem Field::random(Rng& rng) const {
  return from_index(std::uniform_int_distribution<u64>(0, d_->q - 1)(rng));
}

inline Field make_field(u64 p, unsigned m) { return Field::make(p, m); }

// ---------------------------------------------------------------------------
// FieldElem arithmetic

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  FieldElem::check_same(a, b);
  const u64 p = a.data()->p;
  std::vector<u64> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const u64 s = a.c_[i] + b.c_[i];
    c[i] = s >= p ? s - p : s;
  }
  return FieldElem(a.data(), std::move(c));
}

inline FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  FieldElem::check_same(a, b);
  const u64 p = a.data()->p;
  std::vector<u64> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] >= b.c_[i] ? a.c_[i] - b.c_[i] : a.c_[i] + p - b.c_[i];
  return FieldElem(a.data(), std::move(c));
}

inline FieldElem operator-(const FieldElem& a) {
  const u64 p = a.data()->p;
  std::vector<u64> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] == 0 ? 0 : p - a.c_[i];
  return FieldElem(a.data(), std::move(c));
}

inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem::check_same(a, b);
  const auto& d = *a.data();
  const u64 p = d.p;
  const unsigned m = d.m;
  if (m == 1) return FieldElem(a.data(), {a.c_[0] * b.c_[0] % p});
  // p < 2^20 and m <= 63 keep every partial sum below 2^64.
  std::vector<u64> r(2 * m - 1, 0);
  for (unsigned i = 0; i < m; ++i) {
    if (a.c_[i] == 0) continue;
    for (unsigned j = 0; j < m; ++j) r[i + j] += a.c_[i] * b.c_[j];
    if (i % 8 == 7) {
      for (u64& v : r) v %= p;
    }
  }
  for (u64& v : r) v %= p;
  for (unsigned k = 2 * m - 2; k >= m; --k) {
    const u64 t = r[k] % p;
    r[k] = 0;
    if (t == 0) continue;
    for (unsigned j = 0; j < m; ++j) r[k - m + j] = (r[k - m + j] + (p - d.modulus[j]) * t) % p;
  }
  r.resize(m);
  return FieldElem(a.data(), std::move(r));
}

inline FieldElem FieldElem::inv() const {
  require(!is_zero(), Errc::DivisionByZero, "inverse of zero");
  const u64 p = data()->p;
  if (data()->m == 1) return FieldElem(data(), {nt::inv_mod(c_[0], p)});
  // Extended Euclid in F_p[X] against the modulus.
  using detail::RawPoly;
  RawPoly r0 = data()->modulus, r1 = c_;
  detail::trim(r1);
  RawPoly s0{}, s1{1};
  while (r1.size() > 1) {
    // q = r0 / r1
    RawPoly rem = r0;
    RawPoly quot(r0.size() - r1.size() + 1, 0);
    const u64 lead_inv = nt::inv_mod(r1.back(), p);
    while (rem.size() >= r1.size()) {
      const u64 t = rem.back() * lead_inv % p;
      const std::size_t shift = rem.size() - r1.size();
      quot[shift] = t;
      for (std::size_t j = 0; j < r1.size(); ++j) rem[shift + j] = (rem[shift + j] + (p - r1[j]) * t) % p;
      detail::trim(rem);
      if (rem.empty()) break;
    }
    // s2 = s0 - quot*s1
    RawPoly prod(quot.size() + s1.size(), 0);
    for (std::size_t i = 0; i < quot.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) prod[i + j] = (prod[i + j] + quot[i] * s1[j]) % p;
    }
    RawPoly s2 = detail::raw_sub(s0, prod, p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  require(r1.size() == 1, Errc::InternalConsistency, "modulus not coprime to element");
  const u64 ci = nt::inv_mod(r1[0], p);
  std::vector<u64> out(data()->m, 0);
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[i] * ci % p;
  return FieldElem(data(), std::move(out));
}

inline FieldElem FieldElem::pow(u64 e) const {
  FieldElem r(data(), std::vector<u64>(data()->m, 0));
  r.c_[0] = 1;
  FieldElem b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

inline FieldElem FieldElem::pow(const BigInt& e) const {
  if (is_zero()) {
    require(e >= 0, Errc::DivisionByZero, "negative power of zero");
    return e == 0 ? pow(u64{0}) : *this;
  }
  BigInt r = e % (data()->q - 1);
  if (r < 0) r += data()->q - 1;
  return pow(static_cast<u64>(r));
}

inline FieldElem FieldElem::frobenius(u64 k) const {
  const unsigned m = data()->m;
  k %= m;
  if (m == 1 || k == 0) return *this;
  const u64 p = data()->p;
  std::vector<u64> cur = c_;
  for (u64 step = 0; step < k; ++step) {
    std::vector<u64> next(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      if (cur[i] == 0) continue;
      const auto& row = data()->frob[i];
      for (unsigned j = 0; j < m; ++j) next[j] += cur[i] * row[j];
      if (i % 8 == 7) {
        for (u64& v : next) v %= p;
      }
    }
    for (u64& v : next) v %= p;
    cur = std::move(next);
  }
  return FieldElem(data(), std::move(cur));
}

// ---------------------------------------------------------------------------
// Free operations

inline FieldElem frobenius(const FieldElem& x, u64 k = 1) { return x.frobenius(k); }

/// Least k >= 1 with x^k = 1, by stripping prime factors of q - 1.
inline u64 mult_order(const FieldElem& x) {
  require(!x.is_zero(), Errc::ZeroElement, "multiplicative order of zero");
  const auto& d = *x.data();
  u64 ord = d.q - 1;
  for (auto [r, e] : d.group_order_factors) {
    for (unsigned k = 0; k < e && ord % r == 0 && x.pow(ord / r).is_one(); ++k) ord /= r;
  }
  return ord;
}

/// All p^m elements in index order.
inline std::vector<FieldElem> enumerate_elements(const Field& f, const Budget& budget = Budget::from_env()) {
  budget.check(f.order(), "enumerate_elements");
  std::vector<FieldElem> out;
  out.reserve(f.q());
  for (u64 i = 0; i < f.q(); ++i) out.push_back(f.from_index(i));
  return out;
}

/// First element, in index order, of order q - 1.
inline FieldElem primitive_element(const Field& f) {
  for (u64 i = 1; i < f.q(); ++i) {
    FieldElem g = f.from_index(i);
    if (mult_order(g) == f.q() - 1) return g;
  }
  fail(Errc::InternalConsistency, "no primitive element");
}

/// True iff x lies in the subfield F_{p^d}.
inline bool in_subfield(const FieldElem& x, unsigned d) { return x.frobenius(d) == x; }

/// Square root in a field of odd order (Tonelli-Shanks with the first
/// non-square in index order). Empty when x is a non-square.
inline std::optional<FieldElem> sqrt(const FieldElem& x) {
  const Field& f = x.field();
  if (x.is_zero()) return x;
  require(f.p() != 2, Errc::UnsupportedPrime, "sqrt needs odd characteristic");
  const u64 qm1 = f.q() - 1;
  if (!x.pow(qm1 / 2).is_one()) return std::nullopt;
  u64 t = qm1;
  unsigned s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  FieldElem z;
  for (u64 i = 1; i < f.q(); ++i) {
    z = f.from_index(i);
    if (!z.pow(qm1 / 2).is_one()) break;
  }
  unsigned m = s;
  FieldElem c = z.pow(t);
  FieldElem tt = x.pow(t);
  FieldElem r = x.pow((t + 1) / 2);
  while (!tt.is_one()) {
    unsigned i = 0;
    FieldElem sq = tt;
    while (!sq.is_one()) {
      sq = sq * sq;
      ++i;
    }
    FieldElem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    m = i;
    c = b * b;
    tt = tt * c;
    r = r * b;
  }
  return r;
}

}  // namespace fpt
