#include "qdb/distance.hpp"

#include <algorithm>

namespace qdb {

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm(n);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    int* dist = dm.row(s);
    std::fill(dist, dist + n, -1);
    dist[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      g.for_neighbors(u, [&](int v) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue[tail++] = v;
        }
      });
    }
    for (int v = 0; v < n; ++v)
      if (dist[v] < 0) throw DisconnectedGraphError(s, v);
  }
  return dm;
}

int DistanceMatrix::max_distance() const {
  return *std::max_element(d_.begin(), d_.end());
}

int diameter(const Graph& g) {
  return all_pairs_distances(g).max_distance();
}

}  // namespace qdb
