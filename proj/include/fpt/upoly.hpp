#pragma once

// Univariate polynomials over a coefficient context K (PrimeField or Field),
// distinct-degree factorisation, and integer polynomials.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fpt/error.hpp"
#include "fpt/gf.hpp"
#include "fpt/nt.hpp"

namespace fpt {

/// Interface every coefficient context provides.
template <class K>
concept CoefficientField = requires(const K& k, const typename K::value_type& a, const BigInt& e, std::mt19937_64& rng) {
  { k.zero() } -> std::convertible_to<typename K::value_type>;
  { k.one() } -> std::convertible_to<typename K::value_type>;
  { k.add(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.sub(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.neg(a) } -> std::convertible_to<typename K::value_type>;
  { k.mul(a, a) } -> std::convertible_to<typename K::value_type>;
  { k.inv(a) } -> std::convertible_to<typename K::value_type>;
  { k.pow(a, e) } -> std::convertible_to<typename K::value_type>;
  { k.pth_root(a) } -> std::convertible_to<typename K::value_type>;
  { k.from_int(i64{}) } -> std::convertible_to<typename K::value_type>;
  { k.random(rng) } -> std::convertible_to<typename K::value_type>;
  { k.is_zero(a) } -> std::convertible_to<bool>;
  { k.equal(a, a) } -> std::convertible_to<bool>;
  { k.order() } -> std::convertible_to<BigInt>;
  { k.characteristic() } -> std::convertible_to<u64>;
};

/// Dense polynomial, constant term first, always trimmed.
template <CoefficientField K>
class Poly {
 public:
  using value_type = typename K::value_type;

  Poly() = default;
  explicit Poly(K k) : k_(std::move(k)) {}
  Poly(K k, std::vector<value_type> c) : k_(std::move(k)), c_(std::move(c)) { trim(); }

  static Poly constant(const K& k, value_type c) { return Poly(k, {std::move(c)}); }
  static Poly monomial(const K& k, value_type c, std::size_t deg) {
    std::vector<value_type> v(deg + 1, k.zero());
    v[deg] = std::move(c);
    return Poly(k, std::move(v));
  }
  static Poly x(const K& k) { return monomial(k, k.one(), 1); }
  /// Build from small signed integers, constant term first.
  static Poly from_ints(const K& k, const std::vector<i64>& v) {
    std::vector<value_type> c;
    c.reserve(v.size());
    for (i64 x : v) c.push_back(k.from_int(x));
    return Poly(k, std::move(c));
  }

  const K& ctx() const { return k_; }
  const std::vector<value_type>& coeffs() const { return c_; }
  /// Degree, with -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && k_.equal(c_[0], k_.one()); }
  value_type coeff(std::size_t i) const { return i < c_.size() ? c_[i] : k_.zero(); }
  value_type lead() const { return c_.empty() ? k_.zero() : c_.back(); }

  Poly monic() const {
    if (is_zero()) return *this;
    const value_type li = k_.inv(lead());
    std::vector<value_type> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(k_.mul(v, li));
    return Poly(k_, std::move(c));
  }

  Poly derivative() const {
    std::vector<value_type> c;
    for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(k_.mul(c_[i], k_.from_int(static_cast<i64>(i % k_.characteristic()))));
    return Poly(k_, std::move(c));
  }

  value_type eval(const value_type& x) const {
    value_type acc = k_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = k_.add(k_.mul(acc, x), c_[i]);
    return acc;
  }

  Poly scale(const value_type& s) const {
    std::vector<value_type> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(k_.mul(v, s));
    return Poly(k_, std::move(c));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<value_type> c(std::max(a.c_.size(), b.c_.size()), a.k_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.k_.add(a.coeff(i), b.coeff(i));
    return Poly(a.k_, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<value_type> c(std::max(a.c_.size(), b.c_.size()), a.k_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.k_.sub(a.coeff(i), b.coeff(i));
    return Poly(a.k_, std::move(c));
  }
  friend Poly operator-(const Poly& a) { return Poly(a.k_) - a; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.k_);
    std::vector<value_type> c(a.c_.size() + b.c_.size() - 1, a.k_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.k_.is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = a.k_.add(c[i + j], a.k_.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.k_, std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.k_.equal(a.c_[i], b.c_[i])) return false;
    }
    return true;
  }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    require(!d.is_zero(), Errc::DivisionByZero, "polynomial division by zero");
    if (degree() < d.degree()) return {Poly(k_), *this};
    std::vector<value_type> rem = c_;
    std::vector<value_type> quo(c_.size() - d.c_.size() + 1, k_.zero());
    const value_type li = k_.inv(d.lead());
    const std::size_t dn = d.c_.size();
    for (std::size_t len = rem.size(); len >= dn; --len) {
      const std::size_t top = len - 1;
      if (k_.is_zero(rem[top])) continue;
      const value_type t = k_.mul(rem[top], li);
      const std::size_t shift = top - (dn - 1);
      quo[shift] = t;
      for (std::size_t j = 0; j < dn; ++j) rem[shift + j] = k_.sub(rem[shift + j], k_.mul(t, d.c_[j]));
    }
    return {Poly(k_, std::move(quo)), Poly(k_, std::move(rem))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return a.divmod(b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return a.divmod(b).second; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += k_.to_string(c_[i]);
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && k_.is_zero(c_.back())) c_.pop_back();
  }

  K k_{};
  std::vector<value_type> c_;
};

using FpPoly = Poly<PrimeField>;
using FqPoly = Poly<Field>;

template <class K>
void check_same_ring(const Poly<K>& a, const Poly<K>& b) {
  require(a.ctx() == b.ctx(), Errc::FieldMismatch, "polynomials over different fields");
}

template <class K>
Poly<K> poly_add(const Poly<K>& f, const Poly<K>& g) {
  check_same_ring(f, g);
  return f + g;
}

template <class K>
Poly<K> poly_mul(const Poly<K>& f, const Poly<K>& g) {
  check_same_ring(f, g);
  return f * g;
}

template <class K>
Poly<K> poly_mod(const Poly<K>& f, const Poly<K>& g) {
  check_same_ring(f, g);
  return f % g;
}

/// Monic gcd; gcd(0, 0) = 0.
template <class K>
Poly<K> poly_gcd(Poly<K> f, Poly<K> g) {
  check_same_ring(f, g);
  while (!g.is_zero()) {
    Poly<K> r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

/// f^e mod `mod` by square-and-multiply.
template <class K>
Poly<K> poly_powmod(const Poly<K>& f, BigInt e, const Poly<K>& mod) {
  check_same_ring(f, mod);
  require(mod.degree() >= 1, Errc::ConstantModulus, "powmod needs a nonconstant modulus");
  require(e >= 0, Errc::NegativeInput, "negative exponent");
  Poly<K> result = Poly<K>::constant(mod.ctx(), mod.ctx().one()) % mod;
  Poly<K> base = f % mod;
  while (e > 0) {
    if ((e & 1) != 0) result = (result * base) % mod;
    e >>= 1;
    if (e > 0) base = (base * base) % mod;
  }
  return result;
}

/// Multiset of degrees of irreducible factors, degree -> count.
class DegreeMultiset {
 public:
  DegreeMultiset() = default;
  DegreeMultiset(std::initializer_list<std::pair<const u64, u64>> init) : counts_(init) {}

  void add(u64 degree, u64 count = 1) {
    if (count) counts_[degree] += count;
  }
  const std::map<u64, u64>& counts() const { return counts_; }
  u64 count(u64 degree) const {
    auto it = counts_.find(degree);
    return it == counts_.end() ? 0 : it->second;
  }
  u64 total_degree() const {
    u64 s = 0;
    for (auto [d, c] : counts_) s += d * c;
    return s;
  }
  u64 factor_count() const {
    u64 s = 0;
    for (auto [d, c] : counts_) s += c;
    return s;
  }
  friend bool operator==(const DegreeMultiset&, const DegreeMultiset&) = default;

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (auto [d, c] : counts_) {
      if (!first) s += ",";
      first = false;
      s += "\"" + std::to_string(d) + "\":" + std::to_string(c);
    }
    return s + "}";
  }

 private:
  std::map<u64, u64> counts_;
};

/// Squarefree decomposition f = lc * prod g_i^{e_i}, g_i monic squarefree
/// and pairwise coprime. Handles the f' = 0 branch by p-th roots.
template <class K>
std::vector<std::pair<Poly<K>, u64>> squarefree_decomposition(const Poly<K>& f) {
  require(f.degree() >= 1, Errc::ConstantInput, "squarefree decomposition of a constant");
  const K& k = f.ctx();
  const u64 p = k.characteristic();
  std::vector<std::pair<Poly<K>, u64>> out;
  Poly<K> g = f.monic();
  Poly<K> c = poly_gcd(g, g.derivative());
  Poly<K> w = g / c;
  u64 i = 1;
  while (w.degree() >= 1) {
    Poly<K> y = poly_gcd(w, c);
    Poly<K> fac = w / y;
    if (fac.degree() >= 1) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() >= 1) {
    // c is a p-th power
    std::vector<typename K::value_type> root;
    for (std::size_t j = 0; j * p < c.coeffs().size(); ++j) root.push_back(k.pth_root(c.coeff(j * p)));
    for (auto& [h, e] : squarefree_decomposition(Poly<K>(k, std::move(root)))) out.emplace_back(std::move(h), e * p);
  }
  return out;
}

/// Distinct-degree split of a monic squarefree g: (d, product of all
/// irreducible factors of degree d).
template <class K>
std::vector<std::pair<u64, Poly<K>>> ddf_components(const Poly<K>& g_in) {
  require(g_in.degree() >= 1, Errc::ConstantInput, "ddf of a constant");
  const K& k = g_in.ctx();
  const BigInt q = k.order();
  std::vector<std::pair<u64, Poly<K>>> out;
  Poly<K> g = g_in.monic();
  const Poly<K> x = Poly<K>::x(k);
  Poly<K> h = x % g;
  for (u64 d = 1; 2 * d <= static_cast<u64>(g.degree()); ++d) {
    h = poly_powmod(h, q, g);
    Poly<K> gd = poly_gcd(g, h - x);
    if (gd.degree() >= 1) {
      out.emplace_back(d, gd);
      g = g / gd;
      h = h % g;
    }
  }
  if (g.degree() >= 1) out.emplace_back(static_cast<u64>(g.degree()), g);
  return out;
}

/// Degrees of the irreducible factors of f, with multiplicity.
template <class K>
DegreeMultiset distinct_degree_factor(const Poly<K>& f) {
  require(f.degree() >= 1, Errc::ConstantInput, "ddf of a constant");
  DegreeMultiset ms;
  for (const auto& [g, e] : squarefree_decomposition(f)) {
    for (const auto& [d, part] : ddf_components(g)) {
      require(part.degree() % static_cast<long>(d) == 0, Errc::InternalConsistency, "ddf component degree");
      ms.add(d, e * (static_cast<u64>(part.degree()) / d));
    }
  }
  require(ms.total_degree() == static_cast<u64>(f.degree()), Errc::InternalConsistency, "ddf degree bookkeeping");
  return ms;
}

/// Rabin irreducibility criterion.
template <class K>
bool is_irreducible(const Poly<K>& f_in) {
  require(f_in.degree() >= 1, Errc::ConstantInput, "irreducibility of a constant");
  const K& k = f_in.ctx();
  const Poly<K> f = f_in.monic();
  const u64 n = static_cast<u64>(f.degree());
  if (n == 1) return true;
  const BigInt q = k.order();
  const Poly<K> x = Poly<K>::x(k);
  auto frob_power = [&](u64 times) {
    Poly<K> h = x % f;
    for (u64 i = 0; i < times; ++i) h = poly_powmod(h, q, f);
    return h;
  };
  if (!(frob_power(n) == x % f)) return false;
  for (auto [r, e] : nt::factor(n)) {
    if (poly_gcd(f, frob_power(n / r) - x).degree() != 0) return false;
  }
  return true;
}

/// Cantor-Zassenhaus equal-degree splitting: f monic, squarefree, every
/// irreducible factor of degree d. Deterministic for a given seed.
template <class K>
std::vector<Poly<K>> equal_degree_split(const Poly<K>& f_in, u64 d, u64 seed) {
  require(f_in.degree() >= 1, Errc::ConstantInput, "split of a constant");
  const K& k = f_in.ctx();
  const Poly<K> f = f_in.monic();
  require(f.degree() % static_cast<long>(d) == 0, Errc::InternalConsistency, "degree not a multiple of d");
  if (static_cast<u64>(f.degree()) == d) return {f};
  std::mt19937_64 rng(seed);
  const BigInt q = k.order();
  const u64 p = k.characteristic();
  const Poly<K> one = Poly<K>::constant(k, k.one());
  for (;;) {
    std::vector<typename K::value_type> rc;
    for (long i = 0; i < f.degree(); ++i) rc.push_back(k.random(rng));
    Poly<K> a(k, std::move(rc));
    if (a.degree() < 1) continue;
    Poly<K> b;
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(e*d - 1)) with q = 2^e
      const u64 steps = static_cast<u64>(boost::multiprecision::msb(q)) * d;
      Poly<K> t = a % f;
      b = t;
      for (u64 i = 1; i < steps; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      b = poly_powmod(a, (ipow(q, static_cast<unsigned>(d)) - 1) / 2, f) - one;
    }
    Poly<K> g = poly_gcd(f, b);
    if (g.degree() >= 1 && g.degree() < f.degree()) {
      auto left = equal_degree_split(g, d, rng());
      auto right = equal_degree_split(f / g, d, rng());
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

/// f(X + c).
template <class K>
Poly<K> shift_argument(const Poly<K>& f, const typename K::value_type& c) {
  const K& k = f.ctx();
  const Poly<K> lin(k, {c, k.one()});
  Poly<K> acc(k);
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * lin + Poly<K>::constant(k, f.coeffs()[i]);
  return acc;
}

/// f(c X).
template <class K>
Poly<K> scale_argument(const Poly<K>& f, const typename K::value_type& c) {
  const K& k = f.ctx();
  std::vector<typename K::value_type> out;
  typename K::value_type pw = k.one();
  for (const auto& v : f.coeffs()) {
    out.push_back(k.mul(v, pw));
    pw = k.mul(pw, c);
  }
  return Poly<K>(k, std::move(out));
}

// ---------------------------------------------------------------------------
// Integer polynomials

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }
  IntPoly(std::initializer_list<long long> c) {
    for (long long v : c) c_.emplace_back(v);
    trim();
  }

  static IntPoly x() { return IntPoly({0, 1}); }
  static IntPoly constant(const BigInt& v) { return IntPoly(std::vector<BigInt>{v}); }

  const std::vector<BigInt>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  /// Reduce coefficients into F_p.
  FpPoly mod_p(const PrimeField& k) const {
    std::vector<u64> out;
    out.reserve(c_.size());
    for (const auto& v : c_) out.push_back(k.from_big(v));
    return FpPoly(k, std::move(out));
  }

  /// f(X^s).
  IntPoly substitute_power(unsigned s) const {
    if (c_.empty()) return {};
    std::vector<BigInt> out((c_.size() - 1) * s + 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) out[i * s] = c_[i];
    return IntPoly(std::move(out));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPoly(std::move(c));
  }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += c_[i].str();
    }
    return s + "]";
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

inline IntPoly int_poly_add(const IntPoly& f, const IntPoly& g) { return f + g; }
inline IntPoly int_poly_mul(const IntPoly& f, const IntPoly& g) { return f * g; }
inline BigInt int_poly_eval(const IntPoly& f, const BigInt& x) { return f.eval(x); }
inline FpPoly int_poly_mod_p(const IntPoly& f, u64 p) { return f.mod_p(PrimeField(p)); }

}  // namespace fpt
