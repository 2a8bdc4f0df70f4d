#pragma once

// JSON views of the library types. Big integers are written as decimal
// strings.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpt/appearance.hpp"
#include "fpt/dickson.hpp"
#include "fpt/fmp.hpp"
#include "fpt/gf.hpp"
#include "fpt/planes.hpp"
#include "fpt/trinomials.hpp"
#include "fpt/upoly.hpp"
#include "fpt/zigzag.hpp"

namespace fpt::io {

using Json = nlohmann::ordered_json;

inline Json big(const BigInt& v) { return v.str(); }

inline Json big_array(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

inline Json field_desc(const Field& f) { return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}}; }

inline Json elem(const FieldElem& x) { return x.coeffs(); }

inline Json elems(const std::vector<FieldElem>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(elem(x));
  return out;
}

inline Json poly(const FpPoly& f) { return f.coeffs(); }

inline Json poly(const IntPoly& f) { return big_array(f.coeffs()); }

inline Json degrees(const DegreeMultiset& d) {
  Json out = Json::object();
  for (auto [deg, c] : d.counts()) out[std::to_string(deg)] = c;
  return out;
}

inline Json support(const SparseSupport& s) {
  return Json{{"p", s.p}, {"m", s.m}, {"size", s.size()}, {"degree", big(s.degree())}, {"support", big_array(s.support)}};
}

inline Json plane(const Plane& P) { return Json::array({elem(P.u), elem(P.v)}); }

inline Json orbit_report(u64 p, unsigned m, const OrbitReport& r) {
  Json sizes = Json::object();
  for (auto [sz, c] : r.orbit_sizes) sizes[std::to_string(sz)] = c;
  return Json{{"p", p}, {"m", m}, {"planes", r.planes}, {"orbits", r.orbits}, {"formula", big(r.formula)}, {"orbit_sizes", sizes}};
}

inline Json zvalues(const Field& f, const ZValues& z) {
  return Json{{"field", field_desc(f)},
              {"count", z.all.size()},
              {"contains_zero", z.contains_zero()},
              {"values", elems(z.all)}};
}

inline Json pencil(const Pencil& pc) {
  Json planes = Json::array();
  for (const auto& P : pc.planes) planes.push_back(plane(P));
  return Json{{"field", field_desc(pc.z.field())},
              {"z", elem(pc.z)},
              {"planes", planes},
              {"points", pc.points.size()}};
}

inline Json appendix(const AppendixReport& r) {
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back(Json{{"point", f.point}, {"check", f.check}});
  return Json{{"m", r.m},
              {"p", r.p},
              {"field_degree", r.field_degree},
              {"points_checked", r.points_checked},
              {"points_skipped", r.points_skipped},
              {"lemma_checks", r.lemma_checks},
              {"failures", fails},
              {"passed", r.passed()}};
}

inline Json representation(const BigInt& n, const ZigzagSeq& s, const std::string& kind) {
  return Json{{"n", big(n)}, {"kind", kind}, {"orientation", orientation_name(s.orientation)}, {"sequence", s.to_string()}};
}

inline Json density(const DensityReport& r) {
  Json out{{"limit", r.limit},
           {"count", r.count_pm1},
           {"count_pp1", r.count_pp1},
           {"total", r.total},
           {"density", r.density},
           {"pp1_all_pm2_mod5", r.pp1_all_pm2_mod5}};
  if (!r.pm1_primes.empty() || !r.pp1_primes.empty()) {
    out["pm1_primes"] = r.pm1_primes;
    out["pp1_primes"] = r.pp1_primes;
  }
  return out;
}

inline Json salle(const SalleReport& r) {
  return Json{{"limit", r.limit}, {"bound_holds", r.bound_holds}, {"equality", r.equality}, {"equality_is_6_5j", r.equality_is_6_5j}};
}

inline Json trinomial_case(const TrinomialCase& c) {
  Json out{{"p", c.p}, {"a", c.a}, {"b", c.b}, {"zeta", c.zeta}};
  out["z"] = c.z ? Json(*c.z) : Json(nullptr);
  out["branch"] = branch_name(c.branch);
  return out;
}

inline Json verification(const DegreeVerification& v) {
  return Json{{"predicted", v.predicted ? degrees(*v.predicted) : Json(nullptr)}, {"actual", degrees(v.actual)}, {"match", v.match}};
}

inline Json frob2(const Frob2Report& r) {
  return Json{{"p", r.p}, {"z", r.z}, {"field_degree", r.m}, {"roots", r.roots}, {"failures", r.failures}, {"passed", r.passed()}};
}

inline Json generated(u64 p, u64 m, const GeneratedIrreducible& g) {
  return Json{{"p", p}, {"m", m}, {"z", g.z}, {"poly", poly(g.poly)}, {"whole_gamma_bar", g.whole_gamma_bar}};
}

inline std::string csv_cell(const Json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  }
  if (v.is_array() || v.is_object()) return csv_cell(Json(v.dump()));
  return v.dump();
}

/// CSV projection: the first array of objects becomes a table; otherwise the
/// top-level fields become key,value rows.
inline std::string to_csv(const Json& doc) {
  std::ostringstream os;
  const Json* rows = nullptr;
  if (doc.is_array()) {
    rows = &doc;
  } else if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        rows = &v;
        break;
      }
    }
  }
  if (rows != nullptr && !rows->empty() && rows->front().is_object()) {
    std::vector<std::string> cols;
    for (const auto& [k, v] : rows->front().items()) cols.push_back(k);
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : *rows) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (r.contains(cols[i]) ? csv_cell(r[cols[i]]) : "");
      os << '\n';
    }
    return os.str();
  }
  os << "key,value\n";
  if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) os << k << ',' << csv_cell(v) << '\n';
  } else {
    os << "value," << csv_cell(doc) << '\n';
  }
  return os.str();
}

}  // namespace fpt::io
