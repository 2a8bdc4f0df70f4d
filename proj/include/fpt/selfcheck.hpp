#pragma once

// The acceptance matrix: one check per criterion, at a quick or full scale.

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fpt/appearance.hpp"
#include "fpt/dickson.hpp"
#include "fpt/fmp.hpp"
#include "fpt/gf.hpp"
#include "fpt/morganvoyce.hpp"
#include "fpt/planes.hpp"
#include "fpt/trinomials.hpp"
#include "fpt/zigzag.hpp"

namespace fpt {

enum class CheckLevel { Quick, Full };

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

struct Checker {
  bool ok = true;
  std::vector<std::string> notes;
  std::size_t shown = 0;

  void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (shown++ < 8) notes.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
  std::string text() const {
    std::string out;
    for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
    if (shown > 8) out += "; ... " + std::to_string(shown - 8) + " more";
    return out;
  }
};

inline bool full(CheckLevel l) { return l == CheckLevel::Full; }

inline std::vector<u64> odd_primes_up_to(u64 n) {
  std::vector<u64> out;
  for (u64 p : nt::primes_up_to(n)) {
    if (p != 2) out.push_back(p);
  }
  return out;
}

inline void orbit_census(Checker& c, CheckLevel) {
  const OrbitReport r = orbit_count(3, 6, Budget{});
  c.expect(r.planes == 11011, "planes = " + std::to_string(r.planes));
  c.expect(r.orbits == 31, "orbits = " + std::to_string(r.orbits));
  c.expect(r.formula == 31, "formula = " + r.formula.str());
  c.note("planes " + std::to_string(r.planes) + ", orbits " + std::to_string(r.orbits));
}

inline void triple_construction(Checker& c, CheckLevel l) {
  const unsigned mmax = full(l) ? 20 : 14;
  for (u64 p : {2, 3, 5, 7}) {
    for (unsigned m = 2; m <= mmax; ++m) {
      c.expect(build_recursive(m, p, Budget{}) == build_zigzag(m, p, Budget{}),
               "recursive != zigzag at (" + std::to_string(p) + "," + std::to_string(m) + ")");
    }
  }
  const std::vector<std::pair<u64, unsigned>> limits =
      full(l) ? std::vector<std::pair<u64, unsigned>>{{2, 16}, {3, 10}, {5, 7}} : std::vector<std::pair<u64, unsigned>>{{2, 12}, {3, 7}, {5, 5}};
  u64 compared = 0;
  for (auto [p, mmax2] : limits) {
    const PrimeField k(p);
    for (unsigned m = 2; m <= mmax2; ++m) {
      const FpPoly oracle = oracle_fmp(make_field(p, m), Budget{});
      c.expect(to_dense(build_recursive(m, p), k) == oracle,
               "oracle mismatch at (" + std::to_string(p) + "," + std::to_string(m) + ")");
      ++compared;
    }
  }
  c.note(std::to_string(compared) + " oracle comparisons");
}

inline void term_count(Checker& c, CheckLevel) {
  for (u64 p : {2, 3, 5, 7, 11}) {
    for (unsigned m = 0; m <= 40; ++m) {
      const SupportCount s = support_size(m, p);
      c.expect(s.size == fib(m), "|supp(" + std::to_string(m) + "," + std::to_string(p) + ")| = " + s.size.str());
      if (m <= 22) c.expect(build_recursive(m, p, Budget{}).size() == fib(m), "materialised size at m=" + std::to_string(m));
    }
  }
}

inline void strong_division(Checker& c, CheckLevel) {
  for (u64 p : {2, 3}) {
    for (unsigned m = 2; m <= 9; ++m) {
      for (unsigned n = 2; n <= 9; ++n) {
        c.expect(gcd_check(m, n, p), "gcd(f_" + std::to_string(m) + ", f_" + std::to_string(n) + ") over F_" + std::to_string(p));
      }
    }
  }
}

inline void table_p19(Checker& c, CheckLevel) {
  const u64 p = 19;
  const std::map<u64, u64> expected{{1, 18}, {5, 18}, {7, 18}, {4, 9}, {10, 9}, {14, 9}, {16, 6}, {18, 3}};
  for (auto [z, m] : expected) {
    const u64 a = alpha_zp(static_cast<i64>(z), p).alpha;
    const DegreeMultiset shape = distinct_degree_factor(gamma(static_cast<i64>(z), p));
    DegreeMultiset want;
    want.add(1, 2);
    want.add(m, (p - 1) / m);
    c.expect(a == m, "alpha(" + std::to_string(z) + ",19) = " + std::to_string(a) + ", expected " + std::to_string(m) +
                         ", gamma factors " + shape.to_string());
    if (a == m) c.expect(shape == want, "gamma_" + std::to_string(z) + " factors " + shape.to_string());
  }
  std::string nine;
  for (u64 z = 1; z < p; ++z) {
    if (alpha_zp(static_cast<i64>(z), p).alpha == 9) nine += (nine.empty() ? "" : ",") + std::to_string(z);
  }
  c.note("alpha = 9 exactly at z in {" + nine + "}");
}

inline void trinomial_exhaustive(Checker& c, CheckLevel l) {
  u64 cases = 0;
  for (u64 p : odd_primes_up_to(full(l) ? 31 : 13)) {
    for (u64 a = 1; a < p; ++a) {
      for (u64 b = 0; b < p; ++b) {
        const DegreeVerification v = verify_degrees(static_cast<i64>(a), static_cast<i64>(b), p);
        ++cases;
        c.expect(v.match, "p=" + std::to_string(p) + " a=" + std::to_string(a) + " b=" + std::to_string(b) + " actual " +
                              v.actual.to_string());
        if (b == 0) c.expect(v.actual == DegreeMultiset{{1, p + 1}}, "b=0 is not totally split at p=" + std::to_string(p));
      }
    }
  }
  c.note(std::to_string(cases) + " trinomials");
}

inline void minus_four(Checker& c, CheckLevel) {
  for (u64 p : odd_primes_up_to(47)) {
    c.expect(alpha_zp(-4, p).alpha == p, "alpha(-4," + std::to_string(p) + ") != p");
    const FpPoly gb = gamma_bar(-4, p);
    c.expect(gb == gamma_bar_minus4_closed(p), "gamma-bar_{-4} closed form at p=" + std::to_string(p));
    c.expect(gb.degree() == static_cast<long>(p) && is_irreducible(gb), "gamma-bar_{-4} reducible at p=" + std::to_string(p));
  }
}

inline void frob2(Checker& c, CheckLevel l) {
  std::vector<std::pair<i64, u64>> cases{{1, 3}, {2, 3}, {1, 5}};
  if (full(l)) cases.push_back({-4, 5});
  u64 roots = 0;
  for (auto [z, p] : cases) {
    const Frob2Report r = frob2_check(z, p, Budget{});
    roots += r.roots;
    c.expect(r.passed(), "Frob2 fails for z=" + std::to_string(z) + " p=" + std::to_string(p));
  }
  c.note(std::to_string(roots) + " roots checked");
}

inline void zigzag_bijection(Checker& c, CheckLevel) {
  for (unsigned n = 0; n <= 18; ++n) {
    const auto seqs = enum_zigzag(n, Orientation::DownUp, Budget{});
    const u64 f = static_cast<u64>(fib(n + 2));
    std::vector<bool> hit(f, false);
    bool ok = seqs.size() == f;
    for (const auto& s : seqs) {
      const BigInt v = value_fib(s);
      if (v < 0 || v >= f || hit[static_cast<std::size_t>(v)]) {
        ok = false;
        break;
      }
      hit[static_cast<std::size_t>(v)] = true;
    }
    c.expect(ok, "value_fib is not a bijection at n=" + std::to_string(n));
  }
  for (unsigned n = 0; n <= 25; ++n) {
    c.expect(enum_zigzag(n, Orientation::DownUp, Budget{}).size() == fib(n + 2), "#DU(" + std::to_string(n) + ")");
  }
}

inline void representations(Checker& c, CheckLevel) {
  c.expect(zeckendorf(64) == std::vector<u64>{10, 6, 2}, "zeckendorf(64)");
  c.expect(signed_zeckendorf(12) == std::vector<i64>{-7, -2}, "signed representation of 12");
  c.expect(signed_zeckendorf(-43) == std::vector<i64>{-10, -7, -2}, "signed representation of -43");
}

inline void morgan_voyce(Checker& c, CheckLevel) {
  for (u64 k = 0; k <= 50; ++k) {
    c.expect(mv_poly(MVKind::b, k) == f_m1(static_cast<unsigned>(2 * k + 1)), "b_" + std::to_string(k));
    c.expect(mv_poly(MVKind::B, k) == f_m1(static_cast<unsigned>(2 * k + 2)), "B_" + std::to_string(k));
  }
  u64 pairs = 0, zero_mismatch = 0;
  for (u64 p : {3, 5, 7, 11, 13, 19}) {
    for (u64 z = 0; z < p; ++z) {
      for (u64 n = 0; n <= p + 1; ++n) {
        const bool same = mod_u64(mv_value(n, z), p) == eval_fp(static_cast<unsigned>(n), PrimeField(p), z);
        if (!same && z == 0) {
          ++zero_mismatch;
          c.ok = false;
          continue;
        }
        c.expect(same, "MV_" + std::to_string(n) + "(" + std::to_string(z) + ") mod " + std::to_string(p) + " != f_{n,p}(z)");
      }
      if (z != 0) {
        ++pairs;
        c.expect(mv_apparition(static_cast<i64>(z), p, z) == alpha_zp(static_cast<i64>(z), p).alpha,
                 "apparition at (" + std::to_string(z) + "," + std::to_string(p) + ")");
      }
    }
  }
  if (zero_mismatch) {
    c.note(std::to_string(zero_mismatch) + " mismatches, all at z = 0 and even n >= 4: f_{n,p}(0) = 1 while MV_n(0) = n/2");
  }
  c.note(std::to_string(pairs) + " apparition pairs");
}

inline void appendix(Checker& c, CheckLevel l) {
  u64 points = 0;
  for (unsigned m = 3; m <= (full(l) ? 6u : 5u); ++m) {
    const AppendixReport r = verify_appendix_recursion(m, make_field(3, m), true, Budget{});
    points += r.points_checked;
    c.expect(r.passed(), "recursion fails in F_{3^" + std::to_string(m) + "}");
  }
  for (unsigned m = 3; m <= (full(l) ? 8u : 6u); ++m) {
    const AppendixReport r = verify_appendix_recursion(m, make_field(2, m), true, Budget{});
    points += r.points_checked;
    c.expect(r.passed(), "recursion fails in F_{2^" + std::to_string(m) + "}");
  }
  c.note(std::to_string(points) + " points");
}

inline void alpha_cross(Checker& c, CheckLevel) {
  u64 pairs = 0;
  for (u64 p : nt::primes_up_to(97)) {
    const PrimeField k(p);
    for (u64 z = 1; z < p; ++z) {
      const u64 a = alpha_zp(static_cast<i64>(z), p).alpha;
      const i64 target = static_cast<i64>(p) - nt::legendre(static_cast<i64>(z * z + 4 * z), p);
      c.expect(target % static_cast<i64>(a) == 0, "alpha(" + std::to_string(z) + "," + std::to_string(p) + ") does not divide " + std::to_string(target));
      if (z == k.from_int(-4)) continue;
      ++pairs;
      c.expect(alpha_via_multiplicative_order(static_cast<i64>(z), p) == a,
               "order mismatch at (" + std::to_string(z) + "," + std::to_string(p) + ")");
    }
  }
  c.note(std::to_string(pairs) + " pairs");
}

/// Primes q dividing Fib(m) with alpha(q) = m.
inline std::vector<u64> primitive_divisors(u64 m) {
  std::vector<u64> out;
  for (auto [q, e] : nt::factor(static_cast<u64>(fib(static_cast<i64>(m))))) {
    if (q >= 2 && alpha_classical(q) == m) out.push_back(q);
  }
  return out;
}

inline void carmichael(Checker& c, CheckLevel) {
  const u64 limit = 10000;
  const auto table = carmichael_table(50, limit);
  std::string missing;
  for (u64 m = 3; m <= 50; ++m) {
    if (m == 6 || m == 12) {
      c.expect(!table.count(m), "a prime with alpha(p) = " + std::to_string(m) + " exists");
      continue;
    }
    if (table.count(m)) continue;
    c.ok = false;
    std::string divs;
    if (m <= 93) {
      for (u64 q : primitive_divisors(m)) divs += (divs.empty() ? "" : "|") + std::to_string(q);
    }
    missing += (missing.empty() ? "" : ", ") + std::to_string(m) + (divs.empty() ? "" : " (least prime " + divs + ")");
  }
  if (!missing.empty()) c.note("no prime <= 10^4 for m = " + missing);
}

inline void shanks_taylor(Checker& c, CheckLevel l) {
  const DensityReport r = shanks_taylor_density(full(l) ? 100000 : 10000);
  c.expect(r.density >= 0.14 && r.density <= 0.21, "density out of band");
  c.expect(r.pp1_all_pm2_mod5, "a prime with alpha(p) = p+1 is not +-2 mod 5");
  std::ostringstream os;
  os << "density " << r.density << " over " << r.total << " primes";
  c.note(os.str());
}

}  // namespace detail

struct Criterion {
  int id;
  const char* name;
  void (*run)(detail::Checker&, CheckLevel);
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "orbit census of planes in F_{3^6}", detail::orbit_census},
      {2, "recursive, zigzag and plane constructions agree", detail::triple_construction},
      {3, "f_{m,p} has Fib(m) terms", detail::term_count},
      {4, "f_{m,p} is a strong division sequence", detail::strong_division},
      {5, "order of appearance table for p = 19", detail::table_p19},
      {6, "trinomial factor degrees, exhaustive", detail::trinomial_exhaustive},
      {7, "z = -4: alpha = p and gamma-bar irreducible", detail::minus_four},
      {8, "roots of gamma-bar satisfy I_0(t,1) = t^(p^2)", detail::frob2},
      {9, "down/up sequences biject onto [0, Fib(n+2))", detail::zigzag_bijection},
      {10, "Zeckendorf and signed representations", detail::representations},
      {11, "Morgan-Voyce bridge", detail::morgan_voyce},
      {12, "bracket recursion for F_{m,p}", detail::appendix},
      {13, "alpha via multiplicative order", detail::alpha_cross},
      {14, "Carmichael scan to 10^4", detail::carmichael},
      {15, "Shanks-Taylor density", detail::shanks_taylor},
  };
  return list;
}

inline CriterionResult run_criterion(const Criterion& crit, CheckLevel level) {
  CriterionResult r;
  r.id = crit.id;
  r.name = crit.name;
  const auto t0 = std::chrono::steady_clock::now();
  detail::Checker c;
  try {
    crit.run(c, level);
    r.passed = c.ok;
    r.detail = c.text();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << (r.passed ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name << " (" << r.seconds << " s)";
  if (!r.detail.empty()) os << ": " << r.detail;
  return os.str();
}

}  // namespace fpt
