#include <random>

#include <benchmark/benchmark.h>

#include "mso/mso.hpp"

namespace {

mso::MultiGraph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  while (true) {
    mso::MultiGraph g(n);
    for (mso::Vertex u = 0; u < n; ++u) {
      for (mso::Vertex v = u + 1; v < n; ++v) {
        if (coin(rng)) g.increment(u, v);
      }
    }
    if (mso::is_connected(g)) return g;
  }
}

void BM_SubtreePolynomialComplete(benchmark::State& state) {
  const auto g = mso::make_complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mso::subtree_polynomial(g));
}
BENCHMARK(BM_SubtreePolynomialComplete)->DenseRange(6, 14, 2)->Unit(benchmark::kMicrosecond);

void BM_SubtreePolynomialSparse(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 0.3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(mso::subtree_polynomial(g));
}
BENCHMARK(BM_SubtreePolynomialSparse)->DenseRange(8, 18, 2)->Unit(benchmark::kMicrosecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto g = random_connected(static_cast<std::size_t>(state.range(0)), 0.5, 11);
  for (auto _ : state) benchmark::DoNotOptimize(mso::canonical_form(g));
}
BENCHMARK(BM_CanonicalForm)->DenseRange(4, 10, 2);

void BM_CanonicalFormComplete(benchmark::State& state) {
  const auto g = mso::make_complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mso::canonical_form(g));
}
BENCHMARK(BM_CanonicalFormComplete)->Arg(8)->Arg(10);

void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mso::enumerate_connected_graphs(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_TreeTotals(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto t = mso::make_t_n({n, mso::default_s_sequence(n)});
  for (auto _ : state) benchmark::DoNotOptimize(mso::tree_subtree_totals(t));
}
BENCHMARK(BM_TreeTotals)->RangeMultiplier(2)->Range(256, 4096)->Unit(benchmark::kMicrosecond);

void BM_TreePolynomial(benchmark::State& state) {
  const auto t = mso::make_path(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mso::tree_subtree_polynomial(t));
}
BENCHMARK(BM_TreePolynomial)->RangeMultiplier(4)->Range(16, 1024)->Unit(benchmark::kMicrosecond);

void BM_ScanEdgeAdditions(benchmark::State& state) {
  const auto g = mso::make_edge_addition_counterexample();
  for (auto _ : state) benchmark::DoNotOptimize(mso::scan_edge_additions(g));
}
BENCHMARK(BM_ScanEdgeAdditions)->Unit(benchmark::kMicrosecond);

void BM_Conjecture1Census(benchmark::State& state) {
  mso::SearchOptions options;
  options.workers = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mso::find_conjecture1_counterexamples(static_cast<std::size_t>(state.range(0)), options));
  }
}
BENCHMARK(BM_Conjecture1Census)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
