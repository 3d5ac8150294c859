#include <benchmark/benchmark.h>

#include <random>

#include "drg/enumerate.hpp"
#include "drg/guide.hpp"
#include "drg/recurrence.hpp"
#include "drg/sampling.hpp"
#include "drg/surd.hpp"
#include "drg/upsilon.hpp"

namespace {

const drg::IntersectionArray& array_named(const std::string& name) {
  for (const drg::NamedArray& n : drg::known_arrays())
    if (n.name == name) return n.array;
  throw std::invalid_argument(name);
}

void BM_Feasibility(benchmark::State& state, const std::string& name) {
  const drg::IntersectionArray& a = array_named(name);
  for (auto _ : state) benchmark::DoNotOptimize(drg::feasibility(a));
}
BENCHMARK_CAPTURE(BM_Feasibility, petersen, std::string("Petersen"));
BENCHMARK_CAPTURE(BM_Feasibility, biggs_smith, std::string("Biggs-Smith"));
BENCHMARK_CAPTURE(BM_Feasibility, foster, std::string("Foster"));

void BM_Enumerate(benchmark::State& state) {
  drg::EnumerationTask task;
  task.k = state.range(0);
  task.max_diameter = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(drg::enumerate_feasible(task));
}
BENCHMARK(BM_Enumerate)->Args({3, 4})->Args({4, 4})->Args({4, 6})->Unit(benchmark::kMillisecond);

void BM_ChebyshevRoots(benchmark::State& state) {
  const drg::Poly p = drg::chebyshev_charpoly(static_cast<int>(state.range(0)));
  const drg::Rational width(1, 1000000000);
  for (auto _ : state) benchmark::DoNotOptimize(drg::isolate_real_roots(p, width));
}
BENCHMARK(BM_ChebyshevRoots)->Arg(5)->Arg(10)->Arg(20);

void BM_SurdRootCount(benchmark::State& state) {
  std::mt19937 rng(7);
  std::vector<drg::sampling::SurdSample> samples;
  for (int i = 0; i < 64; ++i) samples.push_back(drg::sampling::random_surd(rng, 4));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& s = samples[i++ % samples.size()];
    benchmark::DoNotOptimize(drg::surd_root_count(s.expr, s.lo, s.hi));
  }
}
BENCHMARK(BM_SurdRootCount);

void BM_UpsilonSup(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(drg::upsilon_sup(2, drg::Rational(1, 4), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UpsilonSup)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_VerifyRuns(benchmark::State& state) {
  const drg::GraphicalSequence g{{{1, 0, 19}, {2, 10, 8}, {3, 15, 2}, {6, 14, 0}}, 20, 0};
  const int h = static_cast<int>(state.range(0));
  const drg::Quadruple q{g, {1, 3}, {h, 4, 3, 1}, {h, 4, 3, 1}};
  const drg::TridiagonalSequence t = q.tridiagonal();
  const drg::WellPlacedInterval w = drg::well_placed_cells(drg::guide_points(g)).front();
  const drg::AlgebraicNumber theta(w.lo + (w.hi - w.lo) / 3);
  for (auto _ : state) benchmark::DoNotOptimize(drg::verify_runs(t, w, theta));
}
BENCHMARK(BM_VerifyRuns)->Arg(5)->Arg(20)->Arg(40);

}  // namespace
BENCHMARK_MAIN();
