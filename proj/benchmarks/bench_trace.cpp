#include <benchmark/benchmark.h>

#include "hecke/arith.hpp"
#include "hecke/charpoly.hpp"
#include "hecke/trace.hpp"

namespace {

void BM_Hurwitz(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hecke::hurwitz_direct(n));
}
BENCHMARK(BM_Hurwitz)->Arg(10000)->Arg(100000);

void BM_TraceGamma0(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  hecke::precompute_hurwitz(16);
  for (auto _ : state)
    benchmark::DoNotOptimize(hecke::trace_gamma0(4, N | 1, 12));
}
BENCHMARK(BM_TraceGamma0)->Arg(101)->Arg(1001);

void BM_CharPoly(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  hecke::precompute_hurwitz(64);
  for (auto _ : state)
    benchmark::DoNotOptimize(hecke::charpoly(2, N | 1, 12, hecke::Space::full, 4));
}
BENCHMARK(BM_CharPoly)->Arg(101)->Arg(301);

}  // namespace

BENCHMARK_MAIN();
