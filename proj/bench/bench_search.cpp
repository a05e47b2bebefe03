#include <benchmark/benchmark.h>

#include "hindlab/numbers.hpp"
#include "hindlab/ramsey.hpp"
#include "hindlab/search.hpp"

using namespace hindlab;

namespace {

// Seeded 3-coloring of IntAdd(N), searching for a size-m Schur witness.
void run_search(benchmark::State& state, int threads, bool reference) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto s = GroundStructure::int_add(n);
  const Coloring f(s, ColoringSpec::seeded(7, 3));
  const auto family = PatternFamily::schur();
  const SearchBudget budget;
  std::uint64_t cands = 0;
  for (auto _ : state) {
    const auto r = reference ? reference::find_witness(s, f, family, m, budget, false)
                             : find_witness(s, f, family, m, budget, false, ExecConfig{threads});
    cands = r.candidates;
    benchmark::DoNotOptimize(r.status);
  }
  state.counters["candidates"] = static_cast<double>(cands);
}

void BM_SearchSerial(benchmark::State& state) { run_search(state, 1, false); }
void BM_SearchParallel(benchmark::State& state) { run_search(state, 0, false); }
void BM_SearchReference(benchmark::State& state) { run_search(state, 1, true); }

BENCHMARK(BM_SearchSerial)->Args({60, 4})->Args({150, 7})->Args({200, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchParallel)->Args({60, 4})->Args({150, 7})->Args({200, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SearchReference)->Args({60, 4})->Unit(benchmark::kMillisecond);

void run_ramsey(benchmark::State& state, int threads, bool reference) {
  const auto ground = static_cast<std::size_t>(state.range(0));
  const auto target = static_cast<std::size_t>(state.range(1));
  const auto tuples = TupleColoring::from_function(ground, 3, 2, [](std::span<const std::size_t> t) {
    return static_cast<unsigned>(seeded_color(3, (t[0] * 1000 + t[1]) * 1000 + t[2], 2));
  });
  for (auto _ : state) {
    auto r = reference ? reference::ramsey_homogeneous(tuples, target)
                       : ramsey_homogeneous(tuples, target, ExecConfig{threads});
    benchmark::DoNotOptimize(r);
  }
}

void BM_RamseySerial(benchmark::State& state) { run_ramsey(state, 1, false); }
void BM_RamseyParallel(benchmark::State& state) { run_ramsey(state, 0, false); }
void BM_RamseyReference(benchmark::State& state) { run_ramsey(state, 1, true); }

BENCHMARK(BM_RamseySerial)->Args({20, 5})->Args({60, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RamseyParallel)->Args({20, 5})->Args({60, 6})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RamseyReference)->Args({20, 5})->Unit(benchmark::kMillisecond);

void BM_VanDerWaerden(benchmark::State& state) {
  const auto threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto r = min_universal_n(UniversalTarget::progression(3), 3, 32, ExecConfig{threads});
    benchmark::DoNotOptimize(r.n);
  }
}
// W(3;3) = 27 by backtracking; the reference enumerates all 2-colorings up to W(3;2) = 9.
BENCHMARK(BM_VanDerWaerden)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_VanDerWaerdenReference(benchmark::State& state) {
  for (auto _ : state) {
    auto r = reference::min_universal_n(UniversalTarget::progression(3), 2, 16);
    benchmark::DoNotOptimize(r.n);
  }
}
BENCHMARK(BM_VanDerWaerdenReference)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
