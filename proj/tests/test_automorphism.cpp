#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qdb/automorphism.hpp"
#include "qdb/constructions.hpp"

using namespace qdb;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("automorphism groups of the named examples") {
  CHECK(automorphisms(complete_graph(3)).size() == 6);
  CHECK(automorphisms(path_graph(3)).size() == 2);
  CHECK(automorphisms(cycle_graph(4)).size() == 8);
  CHECK(automorphisms(oracle::petersen()).size() == 120);
  CHECK_THROWS_AS(automorphisms(empty_graph(13)), GraphError);
}

TEST_CASE("automorphism output is a group") {
  std::mt19937 rng(57);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(rng, order, 0.5);
    const auto auts = automorphisms(g);

    std::set<std::vector<int>> group(auts.begin(), auts.end());
    CHECK(group.size() == auts.size());  // no duplicates
    // Identity present; closed under composition and inverse.
    std::vector<int> identity(order);
    for (int i = 0; i < order; ++i) identity[i] = i;
    CHECK(group.count(identity) == 1);
    for (const auto& a : auts) {
      std::vector<int> inverse(order);
      for (int i = 0; i < order; ++i) inverse[a[i]] = i;
      CHECK(group.count(inverse) == 1);
      for (const auto& b : auts) {
        std::vector<int> composed(order);
        for (int i = 0; i < order; ++i) composed[i] = a[b[i]];
        CHECK(group.count(composed) == 1);
      }
    }
    CHECK(factorial(order) % static_cast<long long>(auts.size()) == 0);

    // Every listed permutation really is an automorphism.
    for (const auto& a : auts)
      for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
          CHECK(g.has_edge(u, v) == g.has_edge(a[u], a[v]));
  }
}

TEST_CASE("edge transitivity") {
  CHECK(is_edge_transitive(complete_bipartite(2, 3)));
  CHECK_FALSE(is_edge_transitive(path_graph(4)));
  CHECK(is_edge_transitive(cycle_graph(6)));
  CHECK(is_edge_transitive(oracle::petersen()));
  CHECK(is_edge_transitive(star_graph(4)));
  CHECK(edge_orbit_count(path_graph(4)) == 2);
  CHECK(edge_orbit_count(path_graph(5)) == 2);
}
