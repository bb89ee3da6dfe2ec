#include <random>

#include <benchmark/benchmark.h>

#include <gemkit/analysis.hpp>
#include <gemkit/complex.hpp>
#include <gemkit/genus.hpp>
#include <gemkit/io.hpp>
#include <gemkit/report.hpp>
#include <gemkit/smith.hpp>

namespace {

const std::vector<std::string>& names() {
  static const auto n = gemkit::catalog_names();
  return n;
}

void BM_Homology(benchmark::State& state) {
  const auto g = gemkit::catalog(names()[state.range(0)]).graph();
  for (auto _ : state) benchmark::DoNotOptimize(gemkit::homology_of(g));
  state.SetLabel(names()[state.range(0)]);
}
BENCHMARK(BM_Homology)->DenseRange(0, 3);

void BM_GenusSweep(benchmark::State& state) {
  const auto g = gemkit::catalog(names()[state.range(0)]).graph();
  for (auto _ : state) benchmark::DoNotOptimize(gemkit::regular_genus(g));
  state.SetLabel(names()[state.range(0)]);
}
BENCHMARK(BM_GenusSweep)->DenseRange(0, 3);

void BM_Classify(benchmark::State& state) {
  const auto g = gemkit::catalog("cp2_16").graph();
  for (auto _ : state) benchmark::DoNotOptimize(gemkit::classify(g, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Classify)->Arg(1)->Arg(4);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-9, 9);
  gemkit::IntegerMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  for (auto _ : state) benchmark::DoNotOptimize(gemkit::smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_FullReport(benchmark::State& state) {
  const auto doc = gemkit::catalog("s1xs3_8");
  for (auto _ : state) benchmark::DoNotOptimize(gemkit::to_json(gemkit::build_report(doc, {})));
}
BENCHMARK(BM_FullReport);

}  // namespace
BENCHMARK_MAIN();
