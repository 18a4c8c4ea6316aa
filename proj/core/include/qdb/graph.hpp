#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdb {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by distance-based operations on disconnected input; carries a
// witness pair with no connecting path.
struct DisconnectedGraphError : GraphError {
  int u, v;
  DisconnectedGraphError(int u_, int v_)
      : GraphError("graph is disconnected: no path between " +
                   std::to_string(u_) + " and " + std::to_string(v_)),
        u(u_),
        v(v_) {}
};

// Immutable simple undirected graph on vertices 0..order-1.
// Adjacency is a packed bit matrix; rows are word-aligned so neighborhood
// scans and per-vertex set operations stay cheap for the enumeration sweeps.
class Graph {
 public:
  explicit Graph(int order);
  static Graph from_edges(int order,
                          const std::vector<std::pair<int, int>>& edges);

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return u != v && test(u, v);
  }

  int degree(int u) const;
  std::vector<int> neighbors(int u) const;
  std::vector<int> degrees() const;
  // All edges as (u, v) with u < v, lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  template <typename Fn>
  void for_neighbors(int u, Fn&& fn) const {
    const std::uint64_t* r = row(u);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        fn(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  const std::uint64_t* row(int u) const {
    return bits_.data() + static_cast<std::size_t>(u) * words_;
  }
  int row_words() const { return words_; }

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;

  bool test(int u, int v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  void check_vertex(int u) const {
    if (u < 0 || u >= order_)
      throw GraphError("vertex id " + std::to_string(u) + " out of range");
  }

  int order_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Incremental edge insertion during construction; the built Graph stays
// immutable. Rejects self-loops and out-of-range endpoints.
class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : g_(order) {}
  int order() const { return g_.order(); }
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  void add_edge(int u, int v);
  Graph build() { return std::move(g_); }

 private:
  Graph g_;
};

bool is_connected(const Graph& g);

// Two-coloring with component roots (smallest vertex id) colored 0;
// nullopt when some component has an odd cycle.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// Vertices of some odd cycle, in cycle order; empty for bipartite input.
std::vector<int> odd_cycle(const Graph& g);

std::vector<int> degree_multiset(const Graph& g);  // sorted ascending
int diameter(const Graph& g);                      // throws if disconnected

std::vector<std::vector<int>> components(const Graph& g);
// Subgraph induced on `vertices` (relabeled 0..k-1 in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace qdb
