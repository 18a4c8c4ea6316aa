#include "packed12.hpp"

#include <algorithm>
#include <bit>

namespace qdb::detail {

Packed12 pack(const Graph& g) {
  if (g.order() > kPackedMax)
    throw GraphError("operation limited to order <= " +
                     std::to_string(kPackedMax));
  Packed12 p;
  p.n = g.order();
  for (auto [u, v] : g.edges()) p.set_edge(u, v);
  return p;
}

Graph unpack(const Packed12& p) {
  GraphBuilder b(p.n);
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v)
      if (p.edge(u, v)) b.add_edge(u, v);
  return b.build();
}

std::vector<int> refine_colors(const Packed12& g, std::vector<int> colors) {
  const int n = g.n;
  int classes = 0;
  for (int c : colors) classes = std::max(classes, c + 1);
  for (;;) {
    // Signature: own color, then sorted neighbor colors.
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(colors[v]);
      std::uint16_t bits = g.adj[v];
      std::vector<int> nb;
      while (bits) {
        nb.push_back(colors[std::countr_zero(bits)]);
        bits &= bits - 1;
      }
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return sig[a] < sig[b];
    });
    std::vector<int> next(n, 0);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++c;
      next[order[i]] = c;
    }
    if (c + 1 == classes) return next;
    classes = c + 1;
    colors = std::move(next);
  }
}

namespace {

struct CanonSearch {
  const Packed12& g;
  int n = 0;
  int total_bits = 0;
  std::vector<int> pos_color;           // required color per position
  std::vector<std::vector<int>> cells;  // vertices per color, ascending
  std::array<int, kPackedMax> placed{};
  std::uint16_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};

  explicit CanonSearch(const Packed12& graph) : g(graph), n(graph.n) {
    total_bits = n * (n - 1) / 2;
    auto colors = refine_colors(g, std::vector<int>(n, 0));
    int classes = 0;
    for (int c : colors) classes = std::max(classes, c + 1);
    cells.resize(classes);
    for (int v = 0; v < n; ++v) cells[colors[v]].push_back(v);
    for (int c = 0; c < classes; ++c)
      for (std::size_t i = 0; i < cells[c].size(); ++i) pos_color.push_back(c);
  }

  bool twins(int u, int v) const {
    const std::uint16_t mask =
        static_cast<std::uint16_t>(~((1u << u) | (1u << v)));
    return (g.adj[u] & mask) == (g.adj[v] & mask);
  }

  void dfs(int pos, std::uint64_t partial, int bits_done) {
    if (pos == n) {
      best = std::min(best, partial);
      return;
    }
    std::vector<int> tried;
    for (int v : cells[pos_color[pos]]) {
      if (used & (1u << v)) continue;
      // A twin of an already-tried candidate explores an identical subtree
      // (the transposition is an automorphism).
      bool dup = false;
      for (int t : tried)
        if (twins(t, v)) {
          dup = true;
          break;
        }
      if (dup) continue;
      tried.push_back(v);

      std::uint64_t column = 0;
      for (int q = 0; q < pos; ++q)
        column = (column << 1) | (g.edge(placed[q], v) ? 1 : 0);
      const std::uint64_t next_partial = (partial << pos) | column;
      const int next_bits = bits_done + pos;
      // partial holds the top next_bits bits of every completion below it.
      if (next_partial > (best >> (total_bits - next_bits))) continue;

      placed[pos] = v;
      used |= static_cast<std::uint16_t>(1u << v);
      dfs(pos + 1, next_partial, next_bits);
      used &= static_cast<std::uint16_t>(~(1u << v));
    }
  }

  std::uint64_t run() {
    if (n <= 1) return 0;
    dfs(0, 0, 0);
    return best;
  }
};

}  // namespace

std::uint64_t canonical_code(const Packed12& g) {
  return CanonSearch(g).run();
}

Packed12 packed_from_code(int n, std::uint64_t code) {
  Packed12 p;
  p.n = n;
  const int total = n * (n - 1) / 2;
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if ((code >> (total - 1 - k)) & 1) p.set_edge(i, j);
  return p;
}

}  // namespace qdb::detail
