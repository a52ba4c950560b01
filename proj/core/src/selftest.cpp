#include "hecke/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "hecke/arith.hpp"
#include "hecke/charpoly.hpp"
#include "hecke/oracle.hpp"
#include "hecke/quad.hpp"
#include "hecke/trace.hpp"

namespace hecke {

bool SelfTestResult::all_passed() const {
  for (const auto& s : suites)
    if (!s.passed) return false;
  return true;
}

namespace {

using Check = std::function<std::string()>;  // empty string = pass

std::string check_multiplicative() {
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    Int conv = 0;
    for (std::uint64_t d : divisors(n)) conv += sigma(0, n / d) * Int(psi_new(d));
    if (conv != Int(psi(n))) return "sigma_0 * psi_new != psi at n=" + std::to_string(n);
    Int unit = 0;
    for (std::uint64_t d : divisors(n)) unit += Int(beta(d)) * sigma(0, n / d);
    if (unit != Int(n == 1 ? 1 : 0))
      return "beta * sigma_0 != identity at n=" + std::to_string(n);
  }
  return {};
}

std::string check_hurwitz_table() {
  const auto table = hurwitz_table();
  if (!table) return {};  // nothing installed, nothing to validate
  for (std::size_t n = 0; n < table->size(); ++n) {
    if ((*table)[n] != hurwitz_direct(n))
      return "installed H(" + std::to_string(n) + ") disagrees with enumeration";
  }
  return {};
}

std::string check_dimension() {
  for (std::uint64_t N = 1; N <= 60; ++N)
    for (int k = 4; k <= 16; k += 2) {
      if (trace_gamma0(1, N, k) != Int(oracle::dim_formula_gamma0(N, k))) {
        std::ostringstream os;
        os << "trace(1," << N << "," << k << ") != dimension formula";
        return os.str();
      }
    }
  return {};
}

std::string check_tau() {
  const auto delta = oracle::delta_qexp(30);
  for (std::uint64_t m = 1; m <= 30; ++m) {
    if (Rational(trace_gamma0(m, 1, 12)) != delta[m])
      return "trace(m,1,12) != tau(m) at m=" + std::to_string(m);
  }
  return {};
}

std::string check_level1_matrix() {
  for (int k = 12; k <= 26; k += 2) {
    for (std::uint64_t m : {2ull, 3ull}) {
      const auto mat = oracle::hecke_matrix_level1(m, k);
      Int tr = 0;
      for (std::size_t i = 0; i < mat.size(); ++i) tr += mat[i][i];
      if (tr != trace_gamma0(m, 1, k))
        return "matrix trace mismatch at (m,k)=(" + std::to_string(m) + "," +
               std::to_string(k) + ")";
      const auto cp = charpoly(m, 1, k);
      if (oracle::matrix_charpoly(mat) != cp.unnormalized)
        return "charpoly mismatch at (m,k)=(" + std::to_string(m) + "," +
               std::to_string(k) + ")";
    }
  }
  return {};
}

std::string check_quad_sign() {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 20000; ++i) {
    const long a = static_cast<long>(rng() % 2001) - 1000;
    const long b = static_cast<long>(rng() % 2001) - 1000;
    const long d1 = 1 + static_cast<long>(rng() % 50);
    const long d2 = 1 + static_cast<long>(rng() % 50);
    const std::uint64_t m = 2 + rng() % 100;
    const QuadValue v(m, make_rational(a, d1), make_rational(b, d2));
    const double approx = v.to_double();
    const int ds = (approx > 1e-12) ? 1 : (approx < -1e-12 ? -1 : 0);
    if (ds != 0 && v.sign() != ds) return "quad sign disagrees with float eval";
  }
  return {};
}

}  // namespace

std::vector<std::string> selftest_suites() {
  return {"multiplicative", "hurwitz-table", "dimension",
          "tau",            "level1-matrix", "quad-sign"};
}

SelfTestResult run_selftest(const std::vector<std::string>& suites) {
  const std::vector<std::pair<std::string, Check>> all = {
      {"multiplicative", check_multiplicative},
      {"hurwitz-table", check_hurwitz_table},
      {"dimension", check_dimension},
      {"tau", check_tau},
      {"level1-matrix", check_level1_matrix},
      {"quad-sign", check_quad_sign},
  };
  SelfTestResult res;
  for (const auto& name : suites) {
    bool known = false;
    for (const auto& [n, fn] : all) {
      if (n != name) continue;
      known = true;
      SelfTestResult::Suite s;
      s.name = name;
      try {
        s.detail = fn();
        s.passed = s.detail.empty();
      } catch (const std::exception& e) {
        s.passed = false;
        s.detail = e.what();
      }
      res.suites.push_back(std::move(s));
    }
    if (!known) throw precondition_error("unknown selftest suite: " + name);
  }
  return res;
}

}  // namespace hecke
