#pragma once

// Two-dimensional F_p-subspaces of F_{p^m}: enumeration, dilation orbits,
// the nu-value sets, pencils, and the root-product construction of f_{m,p}.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fpt/budget.hpp"
#include "fpt/dickson.hpp"
#include "fpt/error.hpp"
#include "fpt/fmp.hpp"
#include "fpt/gf.hpp"
#include "fpt/upoly.hpp"

namespace fpt {

/// A plane given by its reduced row-echelon basis in the coordinates of
/// F_{p^m} over F_p (coordinate c_0 first). Equal planes have equal bases.
struct Plane {
  FieldElem u, v;

  u64 key() const { return u.index() * u.field().q() + v.index(); }
  friend bool operator==(const Plane& a, const Plane& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator<(const Plane& a, const Plane& b) { return a.key() < b.key(); }
};

/// Canonical basis of span{x, y}.
inline Plane canonical_plane(const FieldElem& x, const FieldElem& y) {
  require(x.field() == y.field(), Errc::FieldMismatch, "plane spanned by elements of different fields");
  const Field& f = x.field();
  const PrimeField& k = f.prime_field();
  const unsigned m = f.m();
  std::vector<u64> r0 = x.coeffs(), r1 = y.coeffs();
  auto axpy = [&](std::vector<u64>& dst, const std::vector<u64>& src, u64 a) {
    for (unsigned c = 0; c < m; ++c) dst[c] = k.sub(dst[c], k.mul(a, src[c]));
  };
  auto scale = [&](std::vector<u64>& r, u64 a) {
    for (auto& c : r) c = k.mul(c, a);
  };
  unsigned c0 = 0;
  while (c0 < m && r0[c0] == 0 && r1[c0] == 0) ++c0;
  require(c0 < m, Errc::DependentPair, "zero vectors do not span a plane");
  if (r0[c0] == 0) std::swap(r0, r1);
  scale(r0, k.inv(r0[c0]));
  axpy(r1, r0, r1[c0]);
  unsigned c1 = c0 + 1;
  while (c1 < m && r1[c1] == 0) ++c1;
  require(c1 < m, Errc::DependentPair, "elements are linearly dependent over F_p");
  scale(r1, k.inv(r1[c1]));
  axpy(r0, r1, r0[c1]);
  return Plane{f.elem(std::move(r0)), f.elem(std::move(r1))};
}

/// The p^2 elements of a plane.
inline std::vector<FieldElem> plane_elements(const Plane& P) {
  const Field& f = P.u.field();
  std::vector<FieldElem> out;
  for (u64 a = 0; a < f.p(); ++a) {
    for (u64 b = 0; b < f.p(); ++b) out.push_back(f.from_int(static_cast<i64>(a)) * P.u + f.from_int(static_cast<i64>(b)) * P.v);
  }
  return out;
}

inline bool plane_contains(const Plane& P, const FieldElem& x) {
  for (const auto& e : plane_elements(P)) {
    if (e == x) return true;
  }
  return false;
}

/// (p^m - 1)(p^m - p) / ((p^2 - 1)(p^2 - p)).
inline BigInt plane_count_formula(u64 p, unsigned m) {
  const BigInt q = ipow(BigInt(p), m);
  const BigInt pp = BigInt(p) * p;
  return (q - 1) * (q - p) / ((pp - 1) * (pp - p));
}

/// Number of dilation orbits of planes.
inline BigInt orbit_count_formula(u64 p, unsigned m) {
  require(m >= 2, Errc::DegreeTooSmall, "planes need m >= 2");
  const BigInt pm1 = ipow(BigInt(p), m - 1);
  const BigInt den = BigInt(p) * p - 1;
  return m % 2 == 1 ? BigInt((pm1 - 1) / den) : BigInt(1 + (pm1 - p) / den);
}

/// Every plane of F_{p^m} in canonical form, generated pivot pair by pivot pair.
inline std::vector<Plane> enumerate_planes(const Field& f, const Budget& budget = Budget::from_env()) {
  const unsigned m = f.m();
  const u64 p = f.p();
  require(m >= 2, Errc::DegreeTooSmall, "planes need m >= 2");
  budget.check(f.order(), "field enumeration");
  budget.check(plane_count_formula(p, m), "plane enumeration");
  std::vector<Plane> out;
  for (unsigned i = 0; i < m; ++i) {
    for (unsigned j = i + 1; j < m; ++j) {
      std::vector<unsigned> free0, free1;
      for (unsigned c = i + 1; c < m; ++c) {
        if (c != j) free0.push_back(c);
      }
      for (unsigned c = j + 1; c < m; ++c) free1.push_back(c);
      const std::size_t nfree = free0.size() + free1.size();
      const u64 total = static_cast<u64>(ipow(BigInt(p), static_cast<unsigned>(nfree)));
      for (u64 t = 0; t < total; ++t) {
        std::vector<u64> r0(m, 0), r1(m, 0);
        r0[i] = 1;
        r1[j] = 1;
        u64 rest = t;
        for (unsigned c : free0) {
          r0[c] = rest % p;
          rest /= p;
        }
        for (unsigned c : free1) {
          r1[c] = rest % p;
          rest /= p;
        }
        out.push_back(Plane{f.elem(std::move(r0)), f.elem(std::move(r1))});
      }
    }
  }
  return out;
}

struct OrbitReport {
  BigInt formula;
  u64 planes = 0;
  u64 orbits = 0;
  std::map<u64, u64> orbit_sizes;  // size -> number of orbits of that size
};

/// Orbits of planes under multiplication by F_{p^m}^*, by union-find along a
/// generator of the multiplicative group.
inline OrbitReport orbit_count(u64 p, unsigned m, const Budget& budget = Budget::from_env()) {
  OrbitReport rep;
  rep.formula = orbit_count_formula(p, m);
  const Field f = make_field(p, m);
  const std::vector<Plane> planes = enumerate_planes(f, budget);
  rep.planes = planes.size();
  std::unordered_map<u64, std::size_t> pos;
  pos.reserve(planes.size() * 2);
  for (std::size_t i = 0; i < planes.size(); ++i) pos.emplace(planes[i].key(), i);
  std::vector<std::size_t> parent(planes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  const FieldElem g = primitive_element(f);
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const Plane img = canonical_plane(g * planes[i].u, g * planes[i].v);
    auto it = pos.find(img.key());
    require(it != pos.end(), Errc::InternalConsistency, "dilated plane missing from enumeration");
    const std::size_t a = find(i), b = find(it->second);
    if (a != b) parent[a] = b;
  }
  std::map<std::size_t, u64> sizes;
  for (std::size_t i = 0; i < planes.size(); ++i) ++sizes[find(i)];
  rep.orbits = sizes.size();
  for (auto [root, sz] : sizes) ++rep.orbit_sizes[sz];
  return rep;
}

/// Elements sorted by index, duplicates removed.
inline std::vector<FieldElem> sorted_unique(std::vector<FieldElem> v) {
  std::sort(v.begin(), v.end(), [](const FieldElem& a, const FieldElem& b) { return a.index() < b.index(); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

struct ZValues {
  std::vector<FieldElem> all;      // Z(m)
  std::vector<FieldElem> nonzero;  // Z°(m)
  bool contains_zero() const { return all.size() != nonzero.size(); }
};

/// nu-values of planes of F_{p^m}. The default mode evaluates nu(x,1) on
/// F \ F_p; the full mode evaluates nu on every plane.
inline ZValues z_values(const Field& f, bool full_sweep = false, const Budget& budget = Budget::from_env()) {
  require(f.m() >= 2, Errc::DegreeTooSmall, "planes need m >= 2");
  std::vector<FieldElem> vals;
  if (full_sweep) {
    for (const Plane& P : enumerate_planes(f, budget)) vals.push_back(nu(P.u, P.v));
  } else {
    for (const FieldElem& x : enumerate_elements(f, budget)) {
      if (!x.in_prime_field()) vals.push_back(nu_at_one(x));
    }
  }
  ZValues out;
  out.all = sorted_unique(std::move(vals));
  for (const auto& z : out.all) {
    if (!z.is_zero()) out.nonzero.push_back(z);
  }
  return out;
}

struct Pencil {
  FieldElem z;
  std::vector<Plane> planes;
  std::vector<FieldElem> points;  // elements of F \ F_p with nu(x,1) = z
};

/// Planes through F_p with nu = z, for z in F_p.
inline Pencil pencil(const FieldElem& z, const Budget& budget = Budget::from_env()) {
  require(z.in_prime_field(), Errc::NotPrimeFieldElement, "pencils need z in F_p");
  const Field& f = z.field();
  require(f.m() >= 2, Errc::DegreeTooSmall, "planes need m >= 2");
  const u64 p = f.p();
  if (z.is_zero()) {
    require(f.m() % 2 == 0, Errc::WrongField, "z = 0 needs F_{p^2} inside the field");
  } else {
    require(eval_fp(f.m(), z).is_zero(), Errc::WrongField,
            "f_{" + std::to_string(f.m()) + "," + std::to_string(p) + "}(" + z.to_string() + ") != 0");
  }
  Pencil out;
  out.z = z;
  std::set<Plane> planes;
  const FieldElem one = f.one();
  for (const FieldElem& x : enumerate_elements(f, budget)) {
    if (x.in_prime_field()) continue;
    if (nu_at_one(x) == z) {
      out.points.push_back(x);
      planes.insert(canonical_plane(one, x));
    }
  }
  out.planes.assign(planes.begin(), planes.end());
  if (z.is_zero()) {
    require(out.planes.size() == 1 && out.points.size() == p * p - p, Errc::InternalConsistency, "F_{p^2} pencil is not a single plane");
  } else {
    require(out.planes.size() == p + 1, Errc::InternalConsistency, "pencil does not have p+1 planes");
    require(out.points.size() == p * p * p - p, Errc::InternalConsistency, "pencil does not have p^3-p points");
  }
  return out;
}

/// prod over Z°(m) of (X - z), assembled from Frobenius orbits so each
/// partial product lies in F_p[X]; raises CoefficientNotInPrimeField if not.
inline FpPoly oracle_fmp(const Field& f, const Budget& budget = Budget::from_env()) {
  const PrimeField& k = f.prime_field();
  const ZValues zv = z_values(f, false, budget);
  std::set<u64> seen;
  FpPoly acc = FpPoly::constant(k, 1);
  for (const FieldElem& z : zv.nonzero) {
    if (seen.count(z.index())) continue;
    FqPoly orbit_poly = FqPoly::constant(f, f.one());
    FieldElem t = z;
    do {
      seen.insert(t.index());
      orbit_poly = orbit_poly * FqPoly(f, {-t, f.one()});
      t = t.frobenius(1);
    } while (!(t == z));
    std::vector<u64> c;
    for (const FieldElem& e : orbit_poly.coeffs()) {
      require(e.in_prime_field(), Errc::CoefficientNotInPrimeField, "orbit product coefficient " + e.to_string());
      c.push_back(e.to_prime());
    }
    acc = acc * FpPoly(k, std::move(c));
  }
  require(seen.size() == zv.nonzero.size(), Errc::InternalConsistency, "Frobenius orbits leave Z°");
  return acc;
}

}  // namespace fpt
