#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fpt/fpt.hpp"
#include "fpt/io.hpp"
#include "fpt/selfcheck.hpp"

namespace fpt::cli {

using io::Json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;

struct Config {
  u64 p = 0;
  unsigned m = 0;
  i64 z = 0;
  i64 a = 0;
  i64 b = 0;
  std::string n;
  u64 limit = 0;
  u64 k = 0;
  std::string lift;
  std::string format = "json";
  u64 seed = 1;
  std::optional<u64> budget;
  std::string cache_dir;
  std::string method = "recursive";
  std::string kind;
  std::string parity = "even";
  std::string orientation = "du";
  std::string level = "quick";
  unsigned field_degree = 0;
  bool full_sweep = false;
  bool lemmas = false;
  bool is_signed = false;
};

inline BigInt parse_big(const std::string& s) {
  require(!s.empty(), Errc::BadParameter, "missing integer argument");
  try {
    return BigInt(s);
  } catch (const std::exception&) {
    fail(Errc::BadParameter, "not an integer: " + s);
  }
}

inline void need_prime(u64 p) {
  require(p >= 2, Errc::BadParameter, "--p is required");
  require(nt::is_prime(p), Errc::CompositeModulusBase, std::to_string(p) + " is not prime");
}

class App {
 public:
  App() : app_("Polynomials f_{m,p}, planes in finite fields, zigzag representations and orders of appearance", "fpt") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--format", cfg_.format, "json (default) or csv")->check(CLI::IsMember({"json", "csv"}));
    app_.add_option("--budget", cfg_.budget, "enumeration budget; FPT_BUDGET sets the default");
    app_.add_option("--cache-dir", cfg_.cache_dir, "memoize f_{m,p} supports here");
    build_fmp();
    build_planes();
    build_zigzag();
    build_alpha();
    build_trinomial();
    build_mv();
    build_verify();
    auto* sc = app_.add_subcommand("selfcheck", "acceptance matrix; quick < 30 s, full < 15 min");
    sc->add_option("--level", cfg_.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    sc->callback([this] { selfcheck(); });
  }

  /// Parse and run; reports go to `out`, diagnostics to `err`.
  int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    out_ = &out;
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(args);
    } catch (const CLI::CallForHelp&) {
      out << app_.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n" << usage();
      return kExitUsage;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      if (e.code() == Errc::BudgetExceeded) return kExitBudget;
      if (is_invariant_violation(e.code())) return kExitInvariant;
      err << usage();
      return kExitUsage;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n" << usage();
      return kExitUsage;
    }
    return exit_code_;
  }

  std::string usage() const { return app_.help(); }

 private:
  CLI::App app_;
  Config cfg_;
  std::ostream* out_ = &std::cout;
  int exit_code_ = kExitOk;

  Budget budget() const {
    Budget b = Budget::from_env();
    if (cfg_.budget) b.limit = *cfg_.budget;
    require(b.limit > 0, Errc::BadParameter, "budget must be positive");
    return b;
  }

  void emit(const Json& doc) {
    if (cfg_.format == "csv") {
      *out_ << io::to_csv(doc);
    } else {
      *out_ << doc.dump() << "\n";
    }
  }

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help) {
    auto* s = parent->add_subcommand(name, help);
    return s;
  }

  void opt_p(CLI::App* s) { s->add_option("--p", cfg_.p, "prime")->required(); }
  void opt_m(CLI::App* s, bool required = true) {
    auto* o = s->add_option("--m", cfg_.m, "degree or index");
    if (required) o->required();
  }
  void opt_z(CLI::App* s) { s->add_option("--z", cfg_.z, "residue")->required(); }

  // fmp ---------------------------------------------------------------------

  void build_fmp() {
    auto* g = app_.add_subcommand("fmp", "the polynomials f_{m,p}");
    g->require_subcommand(1);
    auto* b = leaf(g, "build", "exponent set of f_{m,p}; budget bounds Fib(m)");
    opt_p(b);
    opt_m(b);
    b->add_option("--method", cfg_.method, "recursive or zigzag")->check(CLI::IsMember({"recursive", "zigzag"}));
    b->callback([this] { fmp_build(); });
    auto* e = leaf(g, "eval", "f_{m,p}(z) for z in F_p, O(m)");
    opt_p(e);
    opt_m(e);
    opt_z(e);
    e->callback([this] { fmp_eval(); });
    auto* c = leaf(g, "gcd", "gcd(f_m, f_n) = f_gcd(m,n) over F_p; dense degree at most 10^5");
    opt_p(c);
    opt_m(c);
    c->add_option("--n", cfg_.n, "second index")->required();
    c->callback([this] { fmp_gcd(); });
  }

  SparseSupport cached_support(unsigned m, u64 p, const Budget& bud) {
    namespace fs = std::filesystem;
    if (cfg_.cache_dir.empty()) return build_recursive(m, p, bud);
    const fs::path file = fs::path(cfg_.cache_dir) / ("fmp_p" + std::to_string(p) + "_m" + std::to_string(m) + ".json");
    if (fs::exists(file)) {
      std::ifstream in(file);
      const Json j = Json::parse(in);
      SparseSupport s{p, m, {}};
      for (const auto& e : j.at("support")) s.support.emplace_back(e.get<std::string>());
      return s;
    }
    SparseSupport s = build_recursive(m, p, bud);
    fs::create_directories(cfg_.cache_dir);
    std::ofstream(file) << io::support(s).dump() << "\n";
    return s;
  }

  void fmp_build() {
    need_prime(cfg_.p);
    const Budget bud = budget();
    SparseSupport s;
    if (cfg_.method == "zigzag") {
      s = fpt::build_zigzag(cfg_.m, cfg_.p, bud);
    } else {
      s = cached_support(cfg_.m, cfg_.p, bud);
    }
    Json j = io::support(s);
    j["method"] = cfg_.method;
    if (cfg_.m >= 2) j["degree_formula"] = io::big(degree_formula(cfg_.m, cfg_.p));
    emit(j);
  }

  void fmp_eval() {
    need_prime(cfg_.p);
    const PrimeField k(cfg_.p);
    emit(Json{{"m", cfg_.m}, {"p", cfg_.p}, {"z", k.from_int(cfg_.z)}, {"value", eval_fp(cfg_.m, cfg_.p, cfg_.z)}});
  }

  void fmp_gcd() {
    need_prime(cfg_.p);
    const BigInt nb = parse_big(cfg_.n);
    require(nb >= 0 && nb <= 1000, Errc::BadParameter, "--n out of range");
    const unsigned n = static_cast<unsigned>(nb);
    emit(Json{{"m", cfg_.m}, {"n", n}, {"p", cfg_.p}, {"gcd_index", std::gcd(cfg_.m, n)}, {"holds", gcd_check(cfg_.m, n, cfg_.p, budget())}});
  }

  // planes ------------------------------------------------------------------

  void build_planes() {
    auto* g = app_.add_subcommand("planes", "planes in F_{p^m}");
    g->require_subcommand(1);
    auto* c = leaf(g, "count", "planes and dilation orbits; budget bounds p^m and the plane count");
    opt_p(c);
    opt_m(c);
    c->callback([this] { planes_count(); });
    auto* z = leaf(g, "zvalues", "nu-values of planes; budget bounds p^m (and the plane count with --full)");
    opt_p(z);
    opt_m(z);
    z->add_flag("--full", cfg_.full_sweep, "evaluate nu on every plane");
    z->callback([this] { planes_zvalues(); });
    auto* pc = leaf(g, "pencil", "planes through F_p with nu = z; budget bounds p^m");
    opt_p(pc);
    opt_m(pc);
    opt_z(pc);
    pc->callback([this] { planes_pencil(); });
  }

  void planes_count() {
    need_prime(cfg_.p);
    emit(io::orbit_report(cfg_.p, cfg_.m, orbit_count(cfg_.p, cfg_.m, budget())));
  }

  void planes_zvalues() {
    need_prime(cfg_.p);
    const Budget bud = budget();
    bud.check(ipow(BigInt(cfg_.p), cfg_.m), "field enumeration");
    const Field f = make_field(cfg_.p, cfg_.m);
    emit(io::zvalues(f, z_values(f, cfg_.full_sweep, bud)));
  }

  void planes_pencil() {
    need_prime(cfg_.p);
    const Budget bud = budget();
    bud.check(ipow(BigInt(cfg_.p), cfg_.m), "field enumeration");
    const Field f = make_field(cfg_.p, cfg_.m);
    emit(io::pencil(pencil(f.from_int(cfg_.z), bud)));
  }

  // zigzag ------------------------------------------------------------------

  void build_zigzag() {
    auto* g = app_.add_subcommand("zigzag", "zigzag sequences and Fibonacci representations");
    g->require_subcommand(1);
    auto* r = leaf(g, "rep", "zigzag representation of n; search window 2*len(zeck(n))+6");
    r->add_option("n,--n", cfg_.n, "integer")->required();
    r->add_option("--kind", cfg_.kind, "du, du-sfib, ud or ud-sfib")->check(CLI::IsMember({"du", "du-sfib", "ud", "ud-sfib"}));
    r->add_option("--parity", cfg_.parity, "even or odd length")->check(CLI::IsMember({"even", "odd"}));
    r->callback([this] { zigzag_rep(); });
    auto* z = leaf(g, "zeck", "Zeckendorf indices, or negafibonacci indices with --signed");
    z->add_option("n,--n", cfg_.n, "integer")->required();
    z->add_flag("--signed", cfg_.is_signed, "signed Fibonacci indices");
    z->callback([this] { zigzag_zeck(); });
    auto* e = leaf(g, "enum", "all zigzag sequences of length n <= 40; budget bounds Fib(n+2)");
    e->add_option("n,--n", cfg_.n, "length")->required();
    e->add_option("--orientation", cfg_.orientation, "du or ud")->check(CLI::IsMember({"du", "ud"}));
    e->callback([this] { zigzag_enum(); });
  }

  void zigzag_rep() {
    const BigInt n = parse_big(cfg_.n);
    const Parity par = cfg_.parity == "odd" ? Parity::Odd : Parity::Even;
    const std::string kind = cfg_.kind.empty() ? "du" : cfg_.kind;
    ZigzagSeq s;
    BigInt value;
    if (kind == "du") {
      s = to_downup(n, par);
      value = value_fib(s);
    } else if (kind == "du-sfib") {
      s = to_downup_sfib(n);
      value = value_sfib(s);
    } else if (kind == "ud") {
      s = to_updown(n, par);
      value = value_fib(s);
    } else {
      s = to_updown_sfib(n, par);
      value = value_sfib(s);
    }
    require(value == n, Errc::InternalConsistency, "representation does not evaluate to n");
    emit(io::representation(n, s, kind));
  }

  void zigzag_zeck() {
    const BigInt n = parse_big(cfg_.n);
    if (cfg_.is_signed) {
      emit(Json{{"n", io::big(n)}, {"indices", signed_zeckendorf(n)}, {"kind", "signed"}});
    } else {
      emit(Json{{"n", io::big(n)}, {"indices", zeckendorf(n)}, {"kind", "zeckendorf"}});
    }
  }

  void zigzag_enum() {
    const BigInt nb = parse_big(cfg_.n);
    require(nb >= 0 && nb <= kMaxZigzagLength, Errc::BadParameter, "length must be in [0, 40]");
    const unsigned n = static_cast<unsigned>(nb);
    const Orientation o = cfg_.orientation == "ud" ? Orientation::UpDown : Orientation::DownUp;
    Json rows = Json::array();
    for (const auto& s : enum_zigzag(n, o, budget())) {
      rows.push_back(Json{{"sequence", s.to_string()}, {"value_fib", io::big(value_fib(s))}});
    }
    emit(Json{{"n", n}, {"orientation", orientation_name(o)}, {"count", rows.size()}, {"sequences", rows}});
  }

  // alpha -------------------------------------------------------------------

  void build_alpha() {
    auto* g = app_.add_subcommand("alpha", "orders of appearance");
    g->require_subcommand(1);
    auto* t = leaf(g, "table", "alpha(z,p) for every z in F_p^*; O(p^2)");
    opt_p(t);
    t->callback([this] { alpha_table(); });
    auto* c = leaf(g, "classical", "least m with n | Fib(m)");
    c->add_option("n,--n", cfg_.n, "integer >= 2")->required();
    c->callback([this] { alpha_classical_cmd(); });
    auto* d = leaf(g, "density", "primes with alpha(p) = p-1 and p+1; limit at most 10^6");
    d->add_option("--limit", cfg_.limit, "prime bound")->required();
    d->callback([this] { alpha_density(); });
    auto* k = leaf(g, "carmichael", "least prime with alpha(p) = m for each m up to --m; limit at most 10^7");
    opt_m(k);
    k->add_option("--limit", cfg_.limit, "prime bound")->required();
    k->callback([this] { alpha_carmichael(); });
  }

  void alpha_table() {
    need_prime(cfg_.p);
    require(cfg_.p <= 100000, Errc::BudgetExceeded, "alpha table limited to p <= 10^5");
    Json rows = Json::array();
    for (u64 z = 1; z < cfg_.p; ++z) {
      rows.push_back(Json{{"z", z}, {"alpha", alpha_zp(static_cast<i64>(z), cfg_.p).alpha}});
    }
    emit(Json{{"p", cfg_.p}, {"table", rows}});
  }

  void alpha_classical_cmd() {
    const BigInt n = parse_big(cfg_.n);
    require(n >= 2 && n <= BigInt(u64{1} << 62), Errc::BadParameter, "n must be in [2, 2^62]");
    emit(Json{{"n", io::big(n)}, {"alpha", alpha_classical(static_cast<u64>(n))}});
  }

  void alpha_density() { emit(io::density(shanks_taylor_density(cfg_.limit))); }

  void alpha_carmichael() {
    require(cfg_.limit <= 10000000, Errc::BudgetExceeded, "carmichael scan limited to 10^7");
    const auto table = carmichael_table(cfg_.m, cfg_.limit);
    Json rows = Json::array();
    std::vector<unsigned> missing;
    for (unsigned m = 1; m <= cfg_.m; ++m) {
      if (auto it = table.find(m); it != table.end()) {
        rows.push_back(Json{{"m", m}, {"p", it->second}});
      } else {
        missing.push_back(m);
      }
    }
    emit(Json{{"limit", cfg_.limit}, {"table", rows}, {"missing", missing}});
  }

  // trinomial ---------------------------------------------------------------

  void trinomial_opts(CLI::App* s) {
    s->add_option("--p", cfg_.p, "prime");
    s->add_option("--a", cfg_.a, "coefficient a");
    s->add_option("--b", cfg_.b, "coefficient b");
  }

  void build_trinomial() {
    auto* g = app_.add_subcommand("trinomial", "X^(p+1) - aX - b over F_p; bare form runs verify (p <= 1000)");
    trinomial_opts(g);
    g->callback([this, g] {
      if (g->get_subcommands().empty()) trinomial_verify();
    });
    auto* pr = leaf(g, "predict", "predicted factor degrees, odd p");
    trinomial_opts(pr);
    pr->callback([this] { trinomial_predict(); });
    auto* v = leaf(g, "verify", "prediction against distinct-degree factorisation; p <= 1000");
    trinomial_opts(v);
    v->callback([this] { trinomial_verify(); });
    auto* ge = leaf(g, "generate", "irreducible polynomial of degree m from an element of order m in F_{p^2}");
    ge->add_option("--p", cfg_.p, "prime")->required();
    ge->add_option("--m", cfg_.m, "degree")->required();
    ge->add_option("--seed", cfg_.seed, "seed for the equal-degree split");
    ge->callback([this] { trinomial_generate(); });
    auto* f = leaf(g, "frob2", "I_0(t,1) = t^(p^2) on the roots of gamma-bar_z; budget bounds p^alpha(z,p)");
    f->add_option("--p", cfg_.p, "prime")->required();
    f->add_option("--z", cfg_.z, "residue")->required();
    f->callback([this] { trinomial_frob2(); });
  }

  void trinomial_predict() {
    need_prime(cfg_.p);
    Json j = io::trinomial_case(classify_trinomial(cfg_.a, cfg_.b, cfg_.p));
    j["predicted"] = io::degrees(predict_degrees(cfg_.a, cfg_.b, cfg_.p));
    emit(j);
  }

  void trinomial_verify() {
    need_prime(cfg_.p);
    const DegreeVerification v = verify_degrees(cfg_.a, cfg_.b, cfg_.p);
    Json j;
    if (cfg_.p != 2) {
      j = io::trinomial_case(classify_trinomial(cfg_.a, cfg_.b, cfg_.p));
    } else {
      j = Json{{"p", cfg_.p}, {"a", PrimeField(2).from_int(cfg_.a)}, {"b", PrimeField(2).from_int(cfg_.b)}};
    }
    const Json ver = io::verification(v);
    for (const auto& [k, val] : ver.items()) j[k] = val;
    emit(j);
    if (!v.match) exit_code_ = kExitInvariant;
  }

  void trinomial_generate() {
    need_prime(cfg_.p);
    emit(io::generated(cfg_.p, cfg_.m, generate_irreducible(cfg_.p, cfg_.m, cfg_.seed)));
  }

  void trinomial_frob2() {
    need_prime(cfg_.p);
    const Frob2Report r = frob2_check(cfg_.z, cfg_.p, budget());
    emit(io::frob2(r));
    if (!r.passed()) exit_code_ = kExitInvariant;
  }

  // mv ----------------------------------------------------------------------

  void build_mv() {
    auto* g = app_.add_subcommand("mv", "Morgan-Voyce polynomials and values");
    g->require_subcommand(1);
    auto* p = leaf(g, "poly", "b_k or B_k as integer coefficients; k <= 10^4");
    p->add_option("--kind", cfg_.kind, "b or B")->check(CLI::IsMember({"b", "B"}))->required();
    p->add_option("--k", cfg_.k, "index")->required();
    p->callback([this] { mv_poly_cmd(); });
    auto* a = leaf(g, "apparition", "least m <= p+1 with p | MV_m(Z); O(p) big-integer steps, p <= 10^4");
    opt_p(a);
    opt_z(a);
    a->add_option("--lift", cfg_.lift, "integer lift Z of z (default: z)");
    a->callback([this] { mv_apparition_cmd(); });
  }

  void mv_poly_cmd() {
    require(cfg_.k <= 10000, Errc::BudgetExceeded, "mv poly limited to k <= 10^4");
    const MVKind kind = cfg_.kind == "B" ? MVKind::B : MVKind::b;
    emit(Json{{"kind", cfg_.kind}, {"k", cfg_.k}, {"coeffs", io::poly(mv_poly(kind, cfg_.k))}});
  }

  void mv_apparition_cmd() {
    need_prime(cfg_.p);
    require(cfg_.p <= 10000, Errc::BudgetExceeded, "mv apparition limited to p <= 10^4");
    const BigInt lift = cfg_.lift.empty() ? BigInt(cfg_.z) : parse_big(cfg_.lift);
    const u64 m = mv_apparition(cfg_.z, cfg_.p, lift);
    emit(Json{{"p", cfg_.p}, {"z", PrimeField(cfg_.p).from_int(cfg_.z)}, {"lift", io::big(lift)}, {"alpha", m}});
  }

  // verify ------------------------------------------------------------------

  void build_verify() {
    auto* g = app_.add_subcommand("verify", "exhaustive identity checks");
    g->require_subcommand(1);
    auto* a = leaf(g, "appendix", "F_m = nu^theta(m-3) F_{m-1} + F_{m-2} on F_{p^d}; budget bounds p^d");
    opt_p(a);
    opt_m(a);
    a->add_option("--field-degree", cfg_.field_degree, "d (default m)");
    a->add_flag("--lemmas", cfg_.lemmas, "also check the two nu^theta bracket identities");
    a->callback([this] { verify_appendix(); });
  }

  void verify_appendix() {
    need_prime(cfg_.p);
    const unsigned d = cfg_.field_degree ? cfg_.field_degree : cfg_.m;
    const Budget bud = budget();
    bud.check(ipow(BigInt(cfg_.p), d), "field enumeration");
    const AppendixReport r = verify_appendix_recursion(cfg_.m, make_field(cfg_.p, d), cfg_.lemmas, bud);
    emit(io::appendix(r));
    if (!r.passed()) exit_code_ = kExitInvariant;
  }

  // selfcheck ---------------------------------------------------------------

  void selfcheck() {
    const CheckLevel level = cfg_.level == "full" ? CheckLevel::Full : CheckLevel::Quick;
    Json rows = Json::array();
    bool all = true;
    for (const auto& crit : criteria()) {
      const CriterionResult r = run_criterion(crit, level);
      std::cerr << format_result(r) << std::endl;
      rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      all = all && r.passed;
    }
    emit(Json{{"level", cfg_.level}, {"criteria", rows}, {"passed", all}});
    if (!all) exit_code_ = kExitInvariant;
  }
};

/// Entry point shared by main() and the tests.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  App app;
  return app.run(args, out, err);
}

}  // namespace fpt::cli
