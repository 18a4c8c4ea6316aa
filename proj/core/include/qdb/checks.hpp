#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdb/balance.hpp"
#include "qdb/enumerate.hpp"
#include "qdb/graph.hpp"

namespace qdb {

enum class FindingVerdict { confirmed, counterexample, mismatch };
std::string finding_verdict_name(FindingVerdict v);

// One verification result. Counterexamples embed the graph (graph6) and a
// witness in `detail`, enough to re-verify with the balance module alone.
struct Finding {
  std::string check;
  std::string graph6;
  FindingVerdict verdict = FindingVerdict::confirmed;
  std::string detail;
};

std::string to_tsv_line(const Finding& f);
bool any_counterexample(const std::vector<Finding>& findings);

struct CheckOptions {
  int jobs = 1;
  // graph6 file substituting for in-process enumeration (orders 9-10).
  std::optional<std::string> ingest_path;
};

// Every quasi-balanced(1) graph in scope must be bipartite; violations are
// reported with an odd-cycle witness rather than assumed impossible.
std::vector<Finding> check_bipartite_theorem(const EnumerationScope& scope,
                                             const CheckOptions& opts = {});

// For a quasi-balanced(1) graph with min degree > 1: for every pair of
// adjacent edges, at least one single-edge removal must destroy the
// property (same lambda). Removals that disconnect count as destroyed.
std::vector<Finding> check_edge_removal_graph(const Graph& g);
std::vector<Finding> check_edge_removal(const EnumerationScope& scope,
                                        const CheckOptions& opts = {});

// Corona products over all factor pairs up to max_factor_order: empty
// factors give disjoint stars (each quasi-balanced(1, |V(H)|) when
// |V(H)| >= 2); any other connected corona must not be quasi-balanced.
std::vector<Finding> check_corona(int max_factor_order);

// Direct products: (a) products of quasi factors are disconnected;
// (b) under the diameter-3 regularity hypotheses no product component is
// quasi-balanced; (c) parity distance law versus BFS plus the D_{2,3}
// W-set formula per component (formula disagreements are `mismatch`).
std::vector<Finding> check_tensor(int max_factor_order);

// Every min-degree-1 quasi-(lambda,2) graph in scope must be a complete
// graph with pendants on distinct roots, and every such construction with
// |V|-2 > 1 must classify quasi-balanced(2, |V|-2).
std::vector<Finding> check_pendant_proposition(const EnumerationScope& scope,
                                               const CheckOptions& opts = {});

struct HGraphCore {
  std::string name;
  Graph core;
};
std::vector<HGraphCore> hgraph_core_corpus(int max_core_order = 12);

// Sweep H(m, core, k) over the core corpus, both side orientations and all
// pads 1..max_pad meeting the size precondition, against the claimed
// characterization: quasi iff t1 = n2-m, t2 = n1-k, n1+m != n2+k with
// lambda = (n2+k)/(n1+m); balanced iff t1 = t2 = n1-k = n2-m.
std::vector<Finding> check_hgraph_proposition(int max_core_order = 12,
                                              int max_pad = 4);

// Quasi-balanced(1) graphs: record the distinct-degree and total-distance
// set sizes (both conjectured to be 2) and the no-equal-degree-edge
// strengthening; any violation re-verifies independently before emission.
std::vector<Finding> search_conjecture(const EnumerationScope& scope,
                                       const CheckOptions& opts = {});

// Connected biregular bipartite graphs with unequal side degrees: classify
// each; one that is not quasi-balanced(1) answers the open problem.
std::vector<Finding> search_problem_biregular(const EnumerationScope& scope,
                                              const CheckOptions& opts = {});

// Quasi-balanced(1) graphs that are not edge-transitive answer the open
// problem; every quasi graph in scope is recorded either way.
std::vector<Finding> search_problem_edge_transitive(
    const EnumerationScope& scope, const CheckOptions& opts = {});

// Independent re-verification path: Floyd-Warshall distances and direct
// cardinality counting, sharing no code with classify().
bool independent_verdict_matches(const Graph& g, int n, Verdict verdict,
                                 const std::optional<Rational>& lambda);

}  // namespace qdb
