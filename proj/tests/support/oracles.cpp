#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

namespace {
constexpr int kInf = 1 << 20;
}

std::vector<std::vector<int>> floyd_warshall(const qdb::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

WCounts brute_w_counts(const qdb::Graph& g, int u, int v) {
  const auto d = floyd_warshall(g);
  WCounts w;
  for (int x = 0; x < g.order(); ++x) {
    if (d[x][u] < d[x][v]) ++w.closer_u;
    else if (d[x][v] < d[x][u]) ++w.closer_v;
    else ++w.equidistant;
  }
  return w;
}

std::string reference_graph6_encode(const qdb::Graph& g) {
  const int n = g.order();
  if (n > 62) throw std::runtime_error("reference codec: order > 62");
  std::string bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
  while (bits.size() % 6 != 0) bits.push_back('0');
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + (bits[k + b] - '0');
    out.push_back(static_cast<char>(63 + value));
  }
  return out;
}

qdb::Graph reference_graph6_decode(const std::string& line) {
  if (line.empty()) throw std::runtime_error("reference codec: empty");
  const int n = line[0] - 63;
  std::string bits;
  for (std::size_t k = 1; k < line.size(); ++k) {
    const int value = line[k] - 63;
    for (int b = 5; b >= 0; --b) bits.push_back(((value >> b) & 1) ? '1' : '0');
  }
  qdb::GraphBuilder builder(n);
  int k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits.at(k) == '1') builder.add_edge(i, j);
  return builder.build();
}

bool are_isomorphic(const qdb::Graph& a, const qdb::Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (qdb::degree_multiset(a) != qdb::degree_multiset(b)) return false;
  const int n = a.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v = u + 1; v < n && match; ++v)
        if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

int brute_connected_count(int n) {
  const int pairs = n * (n - 1) / 2;
  std::vector<qdb::Graph> reps;
  for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
    qdb::GraphBuilder b(n);
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k)
        if (mask & (1u << k)) b.add_edge(i, j);
    qdb::Graph g = b.build();
    if (!qdb::is_connected(g)) continue;
    bool known = false;
    for (const auto& rep : reps)
      if (are_isomorphic(rep, g)) {
        known = true;
        break;
      }
    if (!known) reps.push_back(std::move(g));
  }
  return static_cast<int>(reps.size());
}

bool has_odd_closed_walk(const qdb::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<bool>> walk(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) walk[u][v] = walk[v][u] = true;
  // Odd powers of the boolean adjacency matrix up to 2n+1 steps.
  auto mult_adj = [&](const std::vector<std::vector<bool>>& m) {
    std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (m[i][k])
          for (int j = 0; j < n; ++j)
            if (walk[k][j]) out[i][j] = true;
    return out;
  };
  auto current = walk;  // A^1
  for (int len = 1; len <= 2 * n + 1; len += 2) {
    for (int v = 0; v < n; ++v)
      if (current[v][v]) return true;
    current = mult_adj(mult_adj(current));  // A^(len+2)
  }
  return false;
}

qdb::Graph random_graph(std::mt19937& rng, int order, double p) {
  std::bernoulli_distribution coin(p);
  qdb::GraphBuilder b(order);
  for (int u = 0; u < order; ++u)
    for (int v = u + 1; v < order; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return b.build();
}

qdb::Graph random_connected_graph(std::mt19937& rng, int order, double p) {
  for (;;) {
    qdb::Graph g = random_graph(rng, order, p);
    if (qdb::is_connected(g)) return g;
  }
}

qdb::Graph petersen() {
  qdb::GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);      // outer cycle
    b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    b.add_edge(i, 5 + i);            // spokes
  }
  return b.build();
}

}  // namespace oracle
