#include "hecke/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "hecke/arith.hpp"
#include "hecke/charpoly.hpp"

namespace hecke {

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::uint64_t ipow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

std::string trend_csv(const std::vector<TrendReport>& reports) {
  std::ostringstream os;
  os << "m,r,N,k,space,dim,c_r,main_term,rel_err,sign,predicted_sign,match\n";
  for (const auto& rep : reports) {
    for (const auto& row : rep.rows) {
      os << row.m << ',' << row.r << ',' << row.N << ',' << row.k << ','
         << space_name(row.space) << ',' << row.dim << ','
         << fmt_double(row.exact_value) << ',' << fmt_double(row.main_term)
         << ',' << fmt_double(row.rel_err) << ',' << row.exact_sign << ','
         << row.predicted << ',' << (row.match ? "true" : "false") << '\n';
    }
  }
  return os.str();
}

std::vector<TrendReport> run_asymp(const AsympConfig& cfg) {
  if (cfg.m_list.empty() || cfg.r_list.empty())
    throw precondition_error("asymp: m-list and r-list must be nonempty");
  std::uint64_t max_index = 1;
  unsigned max_r = *std::max_element(cfg.r_list.begin(), cfg.r_list.end());
  for (std::uint64_t m : cfg.m_list)
    max_index = std::max(max_index, ipow_u64(m, max_r));
  precompute_hurwitz(4 * max_index);
  std::vector<TrendReport> out;
  for (std::uint64_t m : cfg.m_list)
    out.push_back(trend_report(m, cfg.r_list, cfg.N_range, cfg.k_range,
                               cfg.space, cfg.jobs));
  return out;
}

ConjectureReport scan_conjecture(const ConjectureConfig& cfg) {
  if (cfg.m_list.empty() || cfg.r_max < 1 || cfg.N_max < 1)
    throw precondition_error("scan: m-list, r-max and N-max must be nonempty");
  std::uint64_t max_index = 1;
  for (std::uint64_t m : cfg.m_list)
    max_index = std::max(max_index, ipow_u64(m, cfg.r_max));
  precompute_hurwitz(4 * max_index);

  struct Cell {
    std::uint64_t m;
    std::uint64_t N;
    int k;
  };
  std::vector<Cell> cells;
  for (std::uint64_t m : cfg.m_list)
    for (std::uint64_t N = 1; N <= cfg.N_max; ++N)
      for (int k = 12; k <= cfg.k_max; k += 2) cells.push_back({m, N, k});

  struct CellResult {
    std::vector<VanishingHit> hits;
    std::uint64_t checked = 0;
    std::uint64_t skipped_coprime = 0;
    std::uint64_t skipped_weight = 0;
  };
  std::vector<CellResult> results(cells.size());

  auto eval = [&](const Cell& cell, CellResult& res) {
    // Conjectured weight window for coefficient r: k = 12r or k >= 12r + 4.
    std::vector<unsigned> valid_r;
    for (unsigned r = 1; r <= cfg.r_max; ++r) {
      if (cell.k == static_cast<int>(12 * r) ||
          cell.k >= static_cast<int>(12 * r + 4))
        valid_r.push_back(r);
      else
        ++res.skipped_weight;
    }
    if (valid_r.empty()) return;
    if (std::gcd(cell.m, cell.N) != 1) {
      res.skipped_coprime += valid_r.size();
      return;
    }
    const std::uint64_t dim = dim_cuspforms(cell.N, cell.k, cfg.space);
    const unsigned r_top =
        std::min<std::uint64_t>(valid_r.back(), dim);
    if (r_top == 0) return;
    const auto cp = charpoly(cell.m, cell.N, cell.k, cfg.space, r_top);
    for (unsigned r : valid_r) {
      if (r > dim) continue;  // coefficient undefined below the dimension
      ++res.checked;
      if (cp.coeffs[r].is_zero())
        res.hits.push_back({cell.m, r, cell.N, cell.k});
    }
  };

  const unsigned nthreads = std::max(1u, cfg.jobs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        eval(cells[i], results[i]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  ConjectureReport report;
  report.config = cfg;
  for (const auto& res : results) {
    report.cells_checked += res.checked;
    report.skipped_not_coprime += res.skipped_coprime;
    report.skipped_weight_bound += res.skipped_weight;
    report.hits.insert(report.hits.end(), res.hits.begin(), res.hits.end());
  }
  std::sort(report.hits.begin(), report.hits.end(),
            [](const VanishingHit& a, const VanishingHit& b) {
              return std::tie(a.m, a.r, a.N, a.k) <
                     std::tie(b.m, b.r, b.N, b.k);
            });
  return report;
}

std::string ConjectureReport::to_text() const {
  std::ostringstream os;
  os << "nonvanishing scan: space=" << space_name(config.space)
     << " r<=" << config.r_max << " N<=" << config.N_max
     << " k<=" << config.k_max << " m={";
  for (std::size_t i = 0; i < config.m_list.size(); ++i)
    os << (i ? "," : "") << config.m_list[i];
  os << "}\n";
  os << "coefficients checked: " << cells_checked << "\n";
  os << "skipped (below conjecture weight bound): " << skipped_weight_bound
     << "\n";
  os << "skipped (not coprime): " << skipped_not_coprime << "\n";
  os << "vanishing coefficients found: " << hits.size() << "\n";
  for (const auto& h : hits)
    os << "  VANISHES m=" << h.m << " r=" << h.r << " N=" << h.N
       << " k=" << h.k << "\n";
  return os.str();
}

}  // namespace hecke
