#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hecke/asymptotics.hpp"

namespace hecke {

/// Fixed CSV schema for trend reports:
///   m,r,N,k,space,dim,c_r,main_term,rel_err,sign,predicted_sign,match
/// Exact fields are decimal / p-over-q strings; c_r, main_term and rel_err
/// are presentation floats. Output is byte-deterministic for a given grid,
/// independent of the worker count.
std::string trend_csv(const std::vector<TrendReport>& reports);

struct AsympConfig {
  std::vector<std::uint64_t> m_list;
  std::vector<unsigned> r_list;
  Range N_range;
  Range k_range;
  Space space = Space::full;
  unsigned jobs = 1;
};

std::vector<TrendReport> run_asymp(const AsympConfig& cfg);

struct ConjectureConfig {
  std::vector<std::uint64_t> m_list;
  unsigned r_max = 1;
  std::uint64_t N_max = 1;
  int k_max = 12;
  Space space = Space::full;
  unsigned jobs = 1;
};

struct VanishingHit {
  std::uint64_t m;
  unsigned r;
  std::uint64_t N;
  int k;
};

struct ConjectureReport {
  ConjectureConfig config;
  std::vector<VanishingHit> hits;  // expected empty
  std::uint64_t cells_checked = 0;
  std::uint64_t skipped_not_coprime = 0;
  std::uint64_t skipped_weight_bound = 0;  // k below 12r (or k odd)
  std::string to_text() const;             // deterministic
};

/// Scans c_r(m, N, k) = 0 over the box, honoring the weight bound
/// k = 12r or k >= 12r + 4 and the coprimality filter. Cells below the
/// weight bound or with gcd(m, N) > 1 are skipped with counted reasons.
ConjectureReport scan_conjecture(const ConjectureConfig& cfg);

}  // namespace hecke
