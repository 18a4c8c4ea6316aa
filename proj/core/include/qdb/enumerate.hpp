#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qdb/graph.hpp"

namespace qdb {

// In-process enumeration envelope; larger orders go through file ingest.
inline constexpr int kEnumerationMaxOrder = 10;
inline constexpr int kAutomorphismMaxOrder = 12;

struct EnumerationScope {
  int max_order = 8;
  bool connected = true;
  std::optional<bool> bipartite;
  int min_degree = 0;
  std::optional<int> degree_set_size;
};

// Canonical form of a graph on <= 12 vertices: the lexicographically
// smallest column-major upper-triangle bit encoding over all relabelings.
std::uint64_t canonical_code(const Graph& g);
Graph graph_from_code(int order, std::uint64_t code);

// One canonical representative per isomorphism class (all graphs of the
// given order, connected or not), sorted by code. Cached per order.
const std::vector<std::uint64_t>& all_graph_codes(int order, int jobs = 1);

bool scope_admits(const EnumerationScope& scope, const Graph& g);

// Stream filtered representatives in deterministic (order, code) order,
// covering orders 1..scope.max_order.
void enumerate_graphs(const EnumerationScope& scope,
                      const std::function<void(const Graph&)>& sink,
                      int jobs = 1);
std::vector<Graph> enumerate_connected(const EnumerationScope& scope,
                                       int jobs = 1);

// Ingest path: one graph6 line per graph, substituting for in-process
// enumeration (the file is assumed isomorphism-deduplicated).
std::vector<Graph> read_graph6_lines(const std::string& path);

}  // namespace qdb
