#pragma once

#include <vector>

#include "qdb/graph.hpp"

namespace qdb {

// All-pairs BFS hop distances of a connected graph. Construction fails with
// a witness pair when the graph is disconnected.
class DistanceMatrix {
 public:
  int order() const { return order_; }
  int operator()(int u, int v) const { return d_[u * order_ + v]; }
  int max_distance() const;

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g);
  explicit DistanceMatrix(int order)
      : order_(order), d_(static_cast<std::size_t>(order) * order, 0) {}
  int* row(int u) { return d_.data() + static_cast<std::size_t>(u) * order_; }

  int order_;
  std::vector<int> d_;
};

DistanceMatrix all_pairs_distances(const Graph& g);

}  // namespace qdb
