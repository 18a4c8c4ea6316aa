#include "qdb/graph.hpp"

#include <algorithm>
#include <queue>

namespace qdb {

Graph::Graph(int order) : order_(order) {
  if (order < 1) throw GraphError("graph order must be at least 1");
  words_ = (order + 63) / 64;
  bits_.assign(static_cast<std::size_t>(order) * words_, 0);
}

Graph Graph::from_edges(int order,
                        const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

void GraphBuilder::add_edge(int u, int v) {
  g_.check_vertex(u);
  g_.check_vertex(v);
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (g_.test(u, v)) return;  // duplicates collapse
  g_.bits_[static_cast<std::size_t>(u) * g_.words_ + (v >> 6)] |=
      std::uint64_t{1} << (v & 63);
  g_.bits_[static_cast<std::size_t>(v) * g_.words_ + (u >> 6)] |=
      std::uint64_t{1} << (u & 63);
  ++g_.edge_count_;
}

int Graph::degree(int u) const {
  check_vertex(u);
  int d = 0;
  const std::uint64_t* r = row(u);
  for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
  return d;
}

std::vector<int> Graph::neighbors(int u) const {
  check_vertex(u);
  std::vector<int> out;
  out.reserve(8);
  for_neighbors(u, [&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> out(order_);
  for (int u = 0; u < order_; ++u) out[u] = degree(u);
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order_; ++u)
    for_neighbors(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

namespace {

// BFS from each unvisited root; returns component assignment.
std::vector<int> component_ids(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      g.for_neighbors(queue[head], [&](int v) {
        if (comp[v] < 0) {
          comp[v] = next;
          queue.push_back(v);
        }
      });
    }
    ++next;
  }
  return comp;
}

}  // namespace

bool is_connected(const Graph& g) {
  const auto comp = component_ids(g);
  return std::all_of(comp.begin(), comp.end(),
                     [](int c) { return c == 0; });
}

std::vector<std::vector<int>> components(const Graph& g) {
  const auto comp = component_ids(g);
  const int k = *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::vector<int>> out(k);
  for (int v = 0; v < g.order(); ++v) out[comp[v]].push_back(v);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index[vertices[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(vertices.size()));
  for (int u : vertices)
    g.for_neighbors(u, [&](int v) {
      if (index[v] >= 0 && index[u] < index[v]) b.add_edge(index[u], index[v]);
    });
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(g.order() + u, g.order() + v);
  return b.build();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      bool odd = false;
      g.for_neighbors(u, [&](int v) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<int> odd_cycle(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  std::vector<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      int clash = -1;
      g.for_neighbors(u, [&](int v) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (color[v] == color[u] && clash < 0) {
          clash = v;
        }
      });
      if (clash >= 0) {
        // Walk both endpoints up to their lowest common ancestor.
        std::vector<int> left{u}, right{clash};
        int a = u, b = clash;
        while (depth[a] > depth[b]) left.push_back(a = parent[a]);
        while (depth[b] > depth[a]) right.push_back(b = parent[b]);
        while (a != b) {
          left.push_back(a = parent[a]);
          right.push_back(b = parent[b]);
        }
        std::vector<int> cycle(left.begin(), left.end());
        for (auto it = right.rbegin(); it != right.rend(); ++it)
          if (*it != a) cycle.push_back(*it);
        return cycle;
      }
    }
  }
  return {};
}

std::vector<int> degree_multiset(const Graph& g) {
  auto ds = g.degrees();
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace qdb
