#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdb/distance.hpp"
#include "qdb/graph.hpp"
#include "qdb/rational.hpp"

namespace qdb {

// Partition of V(G) by relative closeness to u versus v, for a pair at
// distance n. The three sets always partition the vertex set.
struct WPartition {
  int u = 0, v = 0;
  int n = 0;  // dist(u, v)
  std::vector<int> closer_to_u, closer_to_v, equidistant;  // each sorted
};

WPartition w_partition(const Graph& g, const DistanceMatrix& d, int u, int v);

enum class Verdict { balanced, quasi_balanced, unbalanced, no_pairs };
std::string verdict_name(Verdict v);

// Cardinalities for one unordered pair (u < v) at the report's distance.
struct PairCount {
  int u = 0, v = 0;
  int closer_u = 0, closer_v = 0, equidistant = 0;
};

struct BalanceReport {
  int n = 1;
  Verdict verdict = Verdict::no_pairs;
  std::optional<Rational> lambda;  // set iff verdict == quasi_balanced
  std::vector<PairCount> pairs;    // lexicographic by (u, v)

  // Line format: header "n=<n> verdict=<...> [lambda=<p>/<q>]",
  // then one "u v |Wu| |Wv| |eq|" line per pair.
  std::string to_text() const;
};

// Verdict implied by a pairs list alone; reports must agree with this.
std::pair<Verdict, std::optional<Rational>> verdict_from_pairs(
    const std::vector<PairCount>& pairs);

BalanceReport classify(const Graph& g, int n);
BalanceReport classify(const Graph& g, const DistanceMatrix& d, int n);

int total_distance(const Graph& g, const DistanceMatrix& d, int u);
bool is_transmission_regular(const Graph& g);

// Distance-2 pairs whose total distances sum to an odd number. The input
// must already classify quasi-balanced at n=1; an empty result means the
// parity statement holds for this graph.
std::vector<std::pair<int, int>> parity_check(const Graph& g);

struct BiregularBipartition {
  int t1 = 0, t2 = 0;  // constant degree on side1 / side2
  int n1 = 0, n2 = 0;  // side sizes
  std::vector<int> side1, side2;  // sorted vertex ids
};

struct DegreeProfile {
  std::vector<int> distinct_degrees;  // sorted ascending
  // Present iff the graph is bipartite and some bipartition has
  // constant degree on each side (component colorings are flipped as
  // needed to find one).
  std::optional<BiregularBipartition> biregular;
};

DegreeProfile degree_profile(const Graph& g);

// (k1, k2) with k1 > k2 when the degree set has exactly two values and no
// edge joins vertices of equal degree.
std::optional<std::pair<int, int>> k1k2_regular(const Graph& g);

// Vertices at distance i from x and j from y, sorted.
std::vector<int> d_set(const Graph& g, const DistanceMatrix& d, int x, int y,
                       int i, int j);

}  // namespace qdb
