#include <benchmark/benchmark.h>

#include "qdb/automorphism.hpp"
#include "qdb/balance.hpp"
#include "qdb/constructions.hpp"
#include "qdb/enumerate.hpp"

namespace {

qdb::Graph petersen() {
  qdb::GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, 5 + i);
  }
  return b.build();
}

void BM_AllPairsDistances(benchmark::State& state) {
  const auto g = qdb::even_chain_family(3, 7, 6).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(qdb::all_pairs_distances(g).max_distance());
}
BENCHMARK(BM_AllPairsDistances);

void BM_ClassifyHGraph(benchmark::State& state) {
  const auto g = qdb::h_graph(3, qdb::incidence_k4(), 2).graph;
  for (auto _ : state)
    benchmark::DoNotOptimize(qdb::classify(g, 1).verdict);
}
BENCHMARK(BM_ClassifyHGraph);

void BM_CanonicalCode(benchmark::State& state) {
  const auto g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(qdb::canonical_code(g));
}
BENCHMARK(BM_CanonicalCode);

void BM_Automorphisms(benchmark::State& state) {
  const auto g = petersen();
  for (auto _ : state) benchmark::DoNotOptimize(qdb::automorphisms(g).size());
}
BENCHMARK(BM_Automorphisms);

void BM_EnumerateConnected(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // Count without touching the level cache twice per iteration.
    int count = 0;
    for (std::uint64_t code : qdb::all_graph_codes(order)) {
      const qdb::Graph g = qdb::graph_from_code(order, code);
      if (qdb::is_connected(g)) ++count;
    }
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateConnected)->Arg(6)->Arg(7)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
