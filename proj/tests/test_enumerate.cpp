#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qdb/constructions.hpp"
#include "qdb/enumerate.hpp"
#include "qdb/graph6.hpp"

using namespace qdb;

TEST_CASE("canonical codes are isomorphism invariants") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int order = 2 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(rng, order, 0.4);
    // Relabel by a random permutation.
    std::vector<int> perm(order);
    for (int i = 0; i < order; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    const Graph h = Graph::from_edges(order, edges);
    CHECK(canonical_code(g) == canonical_code(h));
    // Decoding the code reproduces the code (stable representative).
    const auto code = canonical_code(g);
    CHECK(canonical_code(graph_from_code(order, code)) == code);
    CHECK(oracle::are_isomorphic(g, graph_from_code(order, code)));
  }
}

TEST_CASE("distinct graphs map to distinct codes") {
  CHECK(canonical_code(path_graph(4)) != canonical_code(star_graph(3)));
  CHECK(canonical_code(cycle_graph(5)) != canonical_code(path_graph(5)));
  // Hard cases for the search: heavy symmetry.
  CHECK(canonical_code(complete_graph(9)) ==
        canonical_code(complete_graph(9)));
  CHECK(canonical_code(oracle::petersen()) !=
        canonical_code(cycle_graph(10)));
}

TEST_CASE("connected counts match the brute-force dedup oracle") {
  // Oracle: all edge subsets, pairwise isomorphism dedup.
  const int expected[] = {0, 1, 1, 2, 6, 21, 112};
  for (int order = 1; order <= 6; ++order)
    CHECK(oracle::brute_connected_count(order) == expected[order]);

  EnumerationScope scope;
  scope.max_order = 6;
  std::vector<int> counts(7, 0);
  enumerate_graphs(scope, [&](const Graph& g) { ++counts[g.order()]; });
  for (int order = 1; order <= 6; ++order)
    CHECK(counts[order] == expected[order]);
}

TEST_CASE("enumeration is deterministic and sorted by canonical code") {
  EnumerationScope scope;
  scope.max_order = 5;
  std::vector<std::uint64_t> first, second;
  enumerate_graphs(scope,
                   [&](const Graph& g) { first.push_back(canonical_code(g)); });
  enumerate_graphs(scope, [&](const Graph& g) {
    second.push_back(canonical_code(g));
  }, 4);
  CHECK(first == second);
  // Within an order the stream is ascending.
  const auto& codes7 = all_graph_codes(7);
  CHECK(std::is_sorted(codes7.begin(), codes7.end()));
  CHECK(codes7.size() == 1044);  // all graphs on 7 vertices
}

TEST_CASE("scope filters") {
  EnumerationScope scope;
  scope.max_order = 6;
  scope.bipartite = true;
  int bipartite_count = 0;
  enumerate_graphs(scope, [&](const Graph& g) {
    CHECK(is_bipartite(g));
    CHECK(is_connected(g));
    ++bipartite_count;
  });
  CHECK(bipartite_count > 0);

  scope.bipartite.reset();
  scope.min_degree = 2;
  enumerate_graphs(scope, [&](const Graph& g) {
    for (int v = 0; v < g.order(); ++v) CHECK(g.degree(v) >= 2);
  });

  scope.min_degree = 0;
  scope.degree_set_size = 1;
  enumerate_graphs(scope, [&](const Graph& g) {
    auto ds = degree_multiset(g);
    CHECK(ds.front() == ds.back());
  });

  EnumerationScope bad;
  bad.max_order = 11;
  CHECK_THROWS_AS(enumerate_graphs(bad, [](const Graph&) {}), GraphError);
}

TEST_CASE("graph6 ingest substitutes for enumeration") {
  const std::string path = "ingest_test.g6";
  {
    std::ofstream out(path);
    out << to_graph6(cycle_graph(6)) << "\n";
    out << to_graph6(complete_bipartite(2, 3)) << "\n";
    out << to_graph6(complete_graph(3)) << "\n";
  }
  const auto graphs = read_graph6_lines(path);
  REQUIRE(graphs.size() == 3);
  CHECK(graphs[0] == cycle_graph(6));
  CHECK(graphs[1].order() == 5);
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph6_lines("does-not-exist.g6"), GraphError);
}
