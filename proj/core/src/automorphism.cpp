#include "qdb/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "packed12.hpp"
#include "qdb/enumerate.hpp"

namespace qdb {

namespace {

struct AutSearch {
  const detail::Packed12& g;
  int n;
  std::vector<int> colors;
  std::vector<int> order;  // vertices, most-constrained color classes first
  std::vector<int> image;
  std::uint16_t used = 0;
  std::vector<std::vector<int>> found;

  explicit AutSearch(const detail::Packed12& graph) : g(graph), n(graph.n) {
    colors = detail::refine_colors(g, std::vector<int>(n, 0));
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return std::pair(colors[a], a) < std::pair(colors[b], b);
    });
    image.assign(n, -1);
  }

  void dfs(int depth) {
    if (depth == n) {
      found.push_back(image);
      return;
    }
    const int u = order[depth];
    for (int w = 0; w < n; ++w) {
      if (used & (1u << w)) continue;
      if (colors[w] != colors[u]) continue;
      bool ok = true;
      for (int j = 0; j < depth && ok; ++j) {
        const int s = order[j];
        if (g.edge(u, s) != g.edge(w, image[s])) ok = false;
      }
      if (!ok) continue;
      image[u] = w;
      used |= static_cast<std::uint16_t>(1u << w);
      dfs(depth + 1);
      used &= static_cast<std::uint16_t>(~(1u << w));
      image[u] = -1;
    }
  }
};

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  if (g.order() > kAutomorphismMaxOrder)
    throw GraphError("automorphisms supports orders up to 12");
  AutSearch search(detail::pack(g));
  search.dfs(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

int edge_orbit_count(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) return 0;
  const int m = static_cast<int>(edges.size());
  std::vector<int> edge_index(g.order() * g.order(), -1);
  for (int e = 0; e < m; ++e)
    edge_index[edges[e].first * g.order() + edges[e].second] = e;
  auto index_of = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    return edge_index[u * g.order() + v];
  };

  const auto auts = automorphisms(g);
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& perm : auts)
    for (int e = 0; e < m; ++e) {
      const int img = index_of(perm[edges[e].first], perm[edges[e].second]);
      const int a = find(e), b = find(img);
      if (a != b) parent[a] = b;
    }
  int orbits = 0;
  for (int e = 0; e < m; ++e)
    if (find(e) == e) ++orbits;
  return orbits;
}

bool is_edge_transitive(const Graph& g) {
  return g.edge_count() == 0 || edge_orbit_count(g) == 1;
}

}  // namespace qdb
