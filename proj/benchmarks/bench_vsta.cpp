#include <benchmark/benchmark.h>

#include "vsta/testgen.hpp"
#include "vsta/vsta.hpp"

namespace {

void BM_Embed(benchmark::State& state) {
  vsta::VsaStore store;
  const auto v = vsta::testgen::gen_layered_vsa(store, 42, static_cast<std::size_t>(state.range(0)));
  const auto size = vsta::vsa_size(store, v);
  for (auto _ : state) {
    auto r = vsta::embed(store, v);
    benchmark::DoNotOptimize(r.automaton.num_states());
  }
  const auto elems = static_cast<std::int64_t>(size.nodes() + size.edges());
  state.counters["V+E"] = static_cast<double>(elems);
  state.SetItemsProcessed(state.iterations() * elems);
}
BENCHMARK(BM_Embed)->RangeMultiplier(10)->Range(1000, 1000000);

void BM_Normalize(benchmark::State& state) {
  vsta::testgen::GenConfig cfg;
  cfg.max_depth = static_cast<std::uint32_t>(state.range(0));
  cfg.max_terms = 1000000;
  std::int64_t seed = 0;
  for (auto _ : state) {
    state.PauseTiming();
    vsta::VsaStore store;
    cfg.seed = static_cast<std::uint64_t>(++seed);
    const auto root = vsta::testgen::gen_vsa(store, cfg);
    state.ResumeTiming();
    benchmark::DoNotOptimize(vsta::normalize(store, root).root());
  }
}
BENCHMARK(BM_Normalize)->DenseRange(3, 6);

void BM_EnumerateFig1Grid(benchmark::State& state) {
  // f(g(X), g(Y)) with X, Y ranging over n constants: n^2 terms.
  const auto n = static_cast<std::size_t>(state.range(0));
  vsta::VsaStore store;
  std::vector<vsta::NodeLabel> leaves;
  for (std::size_t i = 0; i < n; ++i) {
    leaves.push_back(store.mk_join(vsta::Symbol{"c" + std::to_string(i), 0}, {}));
  }
  const auto u = store.mk_union(leaves);
  const auto g = store.mk_join(vsta::Symbol{"g", 1}, {u});
  const auto f = store.mk_join(vsta::Symbol{"f", 2}, {g, g});
  const auto norm = vsta::normalize(store, f);
  const auto a = vsta::embed(store, norm).automaton;
  for (auto _ : state) {
    benchmark::DoNotOptimize(vsta::enumerate_ta(a, n * n).size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}
BENCHMARK(BM_EnumerateFig1Grid)->RangeMultiplier(4)->Range(4, 256);

// Layered VSAs square their derivation counts at every binary join, so
// exact counting is measured on generated VSAs with a bounded language.
void BM_CountPaths(benchmark::State& state) {
  vsta::testgen::GenConfig cfg;
  cfg.seed = 3;
  cfg.max_depth = static_cast<std::uint32_t>(state.range(0));
  cfg.max_terms = 1000000;
  vsta::VsaStore store;
  const auto root = vsta::testgen::gen_vsa(store, cfg);
  const auto a = vsta::embed(store, vsta::normalize(store, root)).automaton;
  for (auto _ : state) {
    auto c = vsta::count_paths(a);
    benchmark::DoNotOptimize(c.total);
  }
  state.counters["states"] = static_cast<double>(a.num_states());
}
BENCHMARK(BM_CountPaths)->DenseRange(3, 6);

}  // namespace

BENCHMARK_MAIN();
