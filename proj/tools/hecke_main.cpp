// Command-line surface for exact Hecke polynomial computations:
// traces, characteristic polynomial coefficients, asymptotic comparison
// grids, the nonvanishing scan, and the sign-pattern lab.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/charpoly.hpp"
#include "hecke/scan.hpp"
#include "hecke/selftest.hpp"
#include "hecke/signlab.hpp"
#include "hecke/trace.hpp"

namespace {

using json = nlohmann::json;
using namespace hecke;

constexpr int kExitPrecondition = 2;
constexpr int kExitOutput = 3;

Range parse_range(const std::string& s) {
  Range r;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> r.lo >> c1 >> r.hi) || c1 != ':')
    throw precondition_error("range must be lo:hi or lo:hi:step");
  if (is >> c2 >> r.step) {
    if (c2 != ':' || r.step == 0)
      throw precondition_error("range must be lo:hi or lo:hi:step");
  } else {
    r.step = 1;
  }
  if (r.hi < r.lo) throw precondition_error("range must be nonempty");
  return r;
}

void maybe_load_table_cache() {
  const char* env = std::getenv("HECKE_TABLE_DIR");
  if (!env || !*env) return;
  std::filesystem::path p(env);
  if (std::filesystem::is_directory(p)) p /= "hurwitz.csv";
  install_hurwitz_table(load_hurwitz_table_file(p.string()));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out || !(out << content) || !out.flush()) {
    std::cerr << "error: cannot write output file: " << path << "\n";
    std::exit(kExitOutput);
  }
}

json charpoly_json(const CharPolyResult& res) {
  json j;
  j["m"] = res.query.m;
  j["N"] = res.query.N;
  j["k"] = res.query.k;
  j["space"] = space_name(res.query.space);
  j["dim"] = res.dim;
  json coeffs = json::array(), unnorm = json::array(), signs = json::array();
  for (const auto& c : res.coeffs) coeffs.push_back(c.str());
  for (const auto& a : res.unnormalized) unnorm.push_back(to_string(a));
  for (int s : res.signs) signs.push_back(s);
  j["coeffs"] = std::move(coeffs);
  j["unnormalized"] = std::move(unnorm);
  j["signs"] = std::move(signs);
  return j;
}

json pattern_json(const PatternReport& rep) {
  static const char* kClassNames[] = {"below-zero", "above-zero", "zero",
                                      "all-positive", "all-negative"};
  json j;
  j["degree"] = rep.degree;
  j["observed"] = rep.observed;
  j["predicted"] = rep.predicted;
  j["c1_class"] = kClassNames[static_cast<int>(rep.c1_class)];
  j["quad_mean_sq"] = to_string(rep.quad_mean_sq);
  j["quad_mean"] = rep.quad_mean;
  j["match"] = rep.match;
  return j;
}

std::vector<Rational> read_roots_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw precondition_error("cannot open roots file: " + path);
  std::vector<Rational> roots;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
      auto q = parse_rational(tok);
      if (!q)
        throw precondition_error("roots file line " + std::to_string(lineno) +
                                 ": unparsable rational '" + tok + "'");
      roots.push_back(*q);
    }
  }
  return roots;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Hecke polynomial coefficients, asymptotics and scans"};
  app.require_subcommand(1);

  // ---- trace
  auto* trace_cmd = app.add_subcommand("trace", "Tr T_m on S_k(Gamma_0(N))");
  std::uint64_t t_m = 1, t_N = 1;
  int t_k = 12;
  bool t_new = false, t_normalized = false;
  trace_cmd->add_option("--m", t_m, "Hecke index")->required();
  trace_cmd->add_option("--N", t_N, "level")->required();
  trace_cmd->add_option("--k", t_k, "even weight >= 4")->required();
  trace_cmd->add_flag("--new", t_new, "restrict to the new subspace");
  trace_cmd->add_flag("--normalized", t_normalized,
                      "print Tr T'_m = Tr T_m / m^((k-1)/2)");

  // ---- charpoly
  auto* cp_cmd = app.add_subcommand("charpoly",
                                    "characteristic polynomial coefficients");
  std::uint64_t c_m = 1, c_N = 1;
  int c_k = 12;
  bool c_new = false;
  int c_maxr = -1;
  cp_cmd->add_option("--m", c_m)->required();
  cp_cmd->add_option("--N", c_N)->required();
  cp_cmd->add_option("--k", c_k)->required();
  cp_cmd->add_flag("--new", c_new);
  cp_cmd->add_option("--max-r", c_maxr, "highest coefficient index (default: dim)");

  // ---- asymp
  auto* as_cmd = app.add_subcommand("asymp",
                                    "compare exact c_r against main terms (CSV)");
  std::vector<std::uint64_t> a_m;
  std::vector<unsigned> a_r;
  std::string a_Nrange, a_krange, a_out;
  bool a_new = false;
  unsigned a_jobs = 1;
  as_cmd->add_option("--m", a_m, "Hecke indices")->required();
  as_cmd->add_option("--r", a_r, "coefficient indices")->required();
  as_cmd->add_option("--N-range", a_Nrange, "lo:hi[:step]")->required();
  as_cmd->add_option("--k-range", a_krange, "lo:hi[:step]")->required();
  as_cmd->add_flag("--new", a_new);
  as_cmd->add_option("--out", a_out, "output CSV path ('-' = stdout)");
  as_cmd->add_option("--jobs", a_jobs, "worker threads");

  // ---- scan-conjecture
  auto* sc_cmd = app.add_subcommand("scan-conjecture",
                                    "scan for vanishing coefficients");
  std::vector<std::uint64_t> s_m;
  unsigned s_rmax = 1;
  std::uint64_t s_Nmax = 1;
  int s_kmax = 12;
  bool s_new = false;
  unsigned s_jobs = 1;
  std::string s_out;
  sc_cmd->add_option("--m-list", s_m)->required();
  sc_cmd->add_option("--r-max", s_rmax)->required();
  sc_cmd->add_option("--N-max", s_Nmax)->required();
  sc_cmd->add_option("--k-max", s_kmax)->required();
  sc_cmd->add_flag("--new", s_new);
  sc_cmd->add_option("--jobs", s_jobs);
  sc_cmd->add_option("--out", s_out);

  // ---- signpattern
  auto* sp_cmd = app.add_subcommand("signpattern",
                                    "coefficient sign patterns for totally "
                                    "real root multisets");
  std::string p_roots;
  int p_cheb = -1;
  int p_random = -1;
  std::uint64_t p_seed = 0;
  int p_maxr = -1;
  std::string p_dist = "uniform";
  sp_cmd->add_option("--roots", p_roots, "roots file (rationals, p/q or integer)");
  sp_cmd->add_option("--chebyshev", p_cheb, "degree of the Chebyshev polynomial");
  sp_cmd->add_option("--random", p_random, "degree of a random symmetric ensemble");
  sp_cmd->add_option("--seed", p_seed, "ensemble seed");
  sp_cmd->add_option("--dist", p_dist, "ensemble distribution: uniform | pm");
  sp_cmd->add_option("--max-r", p_maxr, "highest coefficient index");

  // ---- selftest
  auto* st_cmd = app.add_subcommand("selftest",
                                    "oracle-equivalence and invariant suites");
  std::vector<std::string> st_suites;
  st_cmd->add_option("--suite", st_suites,
                     "suite names ('none' = empty selection; default: all)");

  CLI11_PARSE(app, argc, argv);

  try {
    maybe_load_table_cache();

    if (*trace_cmd) {
      const TraceQuery q{t_m, t_N, t_k,
                         t_new ? Space::new_subspace : Space::full};
      q.validate();
      if (t_normalized)
        std::cout << normalized_trace(q).str() << "\n";
      else
        std::cout << to_string(trace(q)) << "\n";
      return 0;
    }

    if (*cp_cmd) {
      const Space space = c_new ? Space::new_subspace : Space::full;
      std::optional<unsigned> rmax;
      if (c_maxr >= 0) rmax = static_cast<unsigned>(c_maxr);
      const auto res = charpoly(c_m, c_N, c_k, space, rmax);
      std::cout << charpoly_json(res).dump(2) << "\n";
      return 0;
    }

    if (*as_cmd) {
      AsympConfig cfg;
      cfg.m_list = a_m;
      cfg.r_list = a_r;
      cfg.N_range = parse_range(a_Nrange);
      cfg.k_range = parse_range(a_krange);
      if (cfg.k_range.step % 2 != 0 && cfg.k_range.lo != cfg.k_range.hi)
        cfg.k_range.step = 2;
      cfg.space = a_new ? Space::new_subspace : Space::full;
      cfg.jobs = a_jobs;
      write_output(a_out, trend_csv(run_asymp(cfg)));
      return 0;
    }

    if (*sc_cmd) {
      ConjectureConfig cfg;
      cfg.m_list = s_m;
      cfg.r_max = s_rmax;
      cfg.N_max = s_Nmax;
      cfg.k_max = s_kmax;
      cfg.space = s_new ? Space::new_subspace : Space::full;
      cfg.jobs = s_jobs;
      const auto report = scan_conjecture(cfg);
      write_output(s_out, report.to_text());
      return report.hits.empty() ? 0 : 1;
    }

    if (*sp_cmd) {
      PatternReport rep;
      const unsigned want = (p_maxr >= 0) ? static_cast<unsigned>(p_maxr) : 0;
      if (p_cheb >= 0) {
        const auto coeffs = chebyshev_monic_coeffs(p_cheb);
        // roots of T_n lie symmetrically in [-1, 1]; alpha^2 = 1/2 for n >= 1
        rep = analyze_coeffs(coeffs, C1Class::zero,
                             p_cheb >= 1 ? make_rational(1, 2) : Rational(0),
                             p_cheb);
      } else if (p_random >= 0) {
        if (p_random < 1) throw precondition_error("--random needs degree >= 1");
        const EnsembleKind kind = (p_dist == "pm") ? EnsembleKind::discrete_pm
                                                   : EnsembleKind::uniform;
        const auto roots = sample_symmetric_ensemble(p_random, 1, p_seed, kind);
        const unsigned rmax =
            want ? std::min<unsigned>(want, p_random)
                 : std::min<unsigned>(24, p_random);
        rep = analyze(roots, rmax);
      } else if (!p_roots.empty()) {
        RootMultiset ms;
        ms.roots = read_roots_file(p_roots);
        for (const auto& x : ms.roots)
          if (abs(x) > ms.bound) ms.bound = abs(x);
        const unsigned rmax =
            want ? std::min<std::size_t>(want, ms.roots.size())
                 : ms.roots.size();
        rep = analyze(ms, rmax);
      } else {
        throw precondition_error(
            "signpattern needs one of --roots, --chebyshev, --random");
      }
      std::cout << pattern_json(rep).dump(2) << "\n";
      return 0;
    }

    if (*st_cmd) {
      std::vector<std::string> suites = st_suites;
      if (suites.size() == 1 && suites[0] == "none") suites.clear();
      if (st_suites.empty()) suites = selftest_suites();
      const auto res = run_selftest(suites);
      for (const auto& s : res.suites)
        std::cout << (s.passed ? "PASS " : "FAIL ") << s.name
                  << (s.detail.empty() ? "" : ": " + s.detail) << "\n";
      std::cout << res.suites.size() << " suites\n";
      return res.all_passed() ? 0 : 1;
    }
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
