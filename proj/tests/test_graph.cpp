#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "qdb/constructions.hpp"
#include "qdb/distance.hpp"
#include "qdb/enumerate.hpp"
#include "qdb/graph.hpp"
#include "qdb/graph6.hpp"

using namespace qdb;

TEST_CASE("graph basics and invariants") {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 1}});
  CHECK(g.order() == 4);
  CHECK(g.edge_count() == 3);  // duplicate collapsed
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.degree(1) == 2);

  // Edge count equals half the degree sum.
  int deg_sum = 0;
  for (int v = 0; v < g.order(); ++v) deg_sum += g.degree(v);
  CHECK(deg_sum == 2 * g.edge_count());

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 5}}), GraphError);
  CHECK_THROWS_AS(Graph(0), GraphError);
}

TEST_CASE("graph6 parses the frozen reference strings") {
  // Values frozen from the independent reference codec.
  CHECK(oracle::reference_graph6_encode(complete_graph(2)) == "A_");
  CHECK(oracle::reference_graph6_encode(complete_graph(3)) == "Bw");
  CHECK(oracle::reference_graph6_encode(empty_graph(1)) == "@");

  const Graph k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.has_edge(0, 1));

  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.edge_count() == 3);

  const Graph e3 = parse_graph6("B?");
  CHECK(e3.order() == 3);
  CHECK(e3.edge_count() == 0);

  CHECK(to_graph6(complete_graph(2)) == "A_");
  CHECK(to_graph6(empty_graph(1)) == "@");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);      // truncated payload
  CHECK_THROWS_AS(parse_graph6("A_ "), ParseError);    // space below range
  CHECK_THROWS_AS(parse_graph6("\x7fw"), ParseError);  // order > 62 header
  CHECK_THROWS_AS(to_graph6(empty_graph(63)), GraphError);
}

TEST_CASE("graph6 round trips agree with the reference codec") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 100; ++trial) {
    const int order = 1 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(rng, order, 0.4);
    const std::string mine = to_graph6(g);
    CHECK(mine == oracle::reference_graph6_encode(g));
    CHECK(parse_graph6(mine) == g);
    CHECK(oracle::reference_graph6_decode(mine) == g);
  }
}

TEST_CASE("edge list parsing") {
  const Graph p3 = parse_edge_list("3\n0 1\n1 2\n");
  CHECK(p3.order() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(p3.has_edge(0, 1));
  CHECK(p3.has_edge(1, 2));

  const Graph k2 = parse_edge_list("2\n0 1\n1 0\n");
  CHECK(k2.edge_count() == 1);

  CHECK_THROWS_AS(parse_edge_list("3\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 7\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("all-pairs distances") {
  const Graph p3 = path_graph(3);
  const auto d = all_pairs_distances(p3);
  CHECK(d(0, 2) == 2);
  CHECK(d(2, 0) == 2);
  CHECK(d(1, 1) == 0);

  const auto dc6 = all_pairs_distances(cycle_graph(6));
  CHECK(dc6(0, 3) == 3);

  // Petersen: all non-adjacent pairs at distance 2.
  const Graph pet = oracle::petersen();
  const auto dp = all_pairs_distances(pet);
  for (int u = 0; u < 10; ++u)
    for (int v = u + 1; v < 10; ++v)
      CHECK(dp(u, v) == (pet.has_edge(u, v) ? 1 : 2));

  const Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(all_pairs_distances(split), DisconnectedGraphError);
  try {
    all_pairs_distances(split);
  } catch (const DisconnectedGraphError& e) {
    CHECK(dp(e.u, e.u) == 0);  // witness pair is in range
    CHECK(e.u != e.v);
  }
}

TEST_CASE("distance axioms hold on random connected graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int order = 2 + static_cast<int>(rng() % 9);
    const Graph g = oracle::random_connected_graph(rng, order, 0.35);
    const auto d = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    for (int u = 0; u < order; ++u) {
      CHECK(d(u, u) == 0);
      for (int v = 0; v < order; ++v) {
        CHECK(d(u, v) == fw[u][v]);
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.has_edge(u, v));
        for (int w = 0; w < order; ++w)
          CHECK(d(u, w) <= d(u, v) + d(v, w));
      }
    }
  }
}

TEST_CASE("connectivity, bipartiteness, diameter, degrees") {
  CHECK(is_connected(path_graph(5)));
  CHECK_FALSE(is_connected(Graph::from_edges(3, {{0, 1}})));

  CHECK_FALSE(is_bipartite(cycle_graph(5)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK(diameter(cycle_graph(6)) == 3);

  const Graph k23 = complete_bipartite(2, 3);
  CHECK(is_bipartite(k23));
  CHECK(diameter(k23) == 2);
  CHECK(degree_multiset(k23) == std::vector<int>({2, 2, 2, 3, 3}));

  CHECK_THROWS_AS(diameter(Graph::from_edges(3, {{0, 1}})),
                  DisconnectedGraphError);

  // A returned coloring is a proper 2-coloring.
  const auto coloring = bipartition(k23);
  REQUIRE(coloring.has_value());
  for (auto [u, v] : k23.edges()) CHECK((*coloring)[u] != (*coloring)[v]);
}

TEST_CASE("bipartiteness agrees with the odd-closed-walk oracle up to order 7") {
  EnumerationScope scope;
  scope.max_order = 7;
  for (const Graph& g : enumerate_connected(scope))
    CHECK(is_bipartite(g) == !oracle::has_odd_closed_walk(g));
}

TEST_CASE("odd cycle witness is a genuine odd cycle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 7, 0.4);
    const auto cycle = odd_cycle(g);
    if (cycle.empty()) {
      CHECK(is_bipartite(g));
      continue;
    }
    CHECK(cycle.size() % 2 == 1);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      CHECK(g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
}

TEST_CASE("components and induced subgraphs") {
  const Graph two = disjoint_union(cycle_graph(4), complete_graph(3));
  const auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 4);
  CHECK(comps[1].size() == 3);
  const Graph c = induced_subgraph(two, comps[1]);
  CHECK(c.order() == 3);
  CHECK(c.edge_count() == 3);
}
