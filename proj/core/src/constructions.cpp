#include "qdb/constructions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qdb/balance.hpp"

namespace qdb {

const Block& BlockGraph::block(const std::string& label) const {
  for (const auto& b : blocks)
    if (b.label == label) return b;
  throw GraphError("no block labeled '" + label + "'");
}

std::string BlockGraph::blocks_comment() const {
  std::ostringstream out;
  out << "# blocks:";
  for (const auto& b : blocks)
    out << ' ' << b.label << "=[" << b.begin << ',' << b.end << ')';
  return out.str();
}

namespace {

void require_positive(int value, const char* what) {
  if (value < 1)
    throw GraphError(std::string(what) + " must be positive, got " +
                     std::to_string(value));
}

void join_ranges(GraphBuilder& b, int lo1, int hi1, int lo2, int hi2) {
  for (int u = lo1; u < hi1; ++u)
    for (int v = lo2; v < hi2; ++v) b.add_edge(u, v);
}

void clique_range(GraphBuilder& b, const std::vector<int>& vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      b.add_edge(vertices[i], vertices[j]);
}

}  // namespace

Graph empty_graph(int m) {
  require_positive(m, "empty graph order");
  return Graph(m);
}

Graph complete_graph(int q) {
  require_positive(q, "complete graph order");
  GraphBuilder b(q);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) b.add_edge(u, v);
  return b.build();
}

Graph cycle_graph(int q) {
  if (q < 3) throw GraphError("cycle order must be at least 3");
  GraphBuilder b(q);
  for (int u = 0; u < q; ++u) b.add_edge(u, (u + 1) % q);
  return b.build();
}

Graph path_graph(int q) {
  require_positive(q, "path order");
  GraphBuilder b(q);
  for (int u = 0; u + 1 < q; ++u) b.add_edge(u, u + 1);
  return b.build();
}

Graph star_graph(int leaves) {
  require_positive(leaves, "leaf count");
  GraphBuilder b(leaves + 1);
  for (int v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return b.build();
}

Graph complete_bipartite(int a, int b_) {
  require_positive(a, "side size");
  require_positive(b_, "side size");
  GraphBuilder b(a + b_);
  join_ranges(b, 0, a, a, a + b_);
  return b.build();
}

Graph incidence_k4() {
  // Vertices 0..3, then the six K4 edges {0,1},{0,2},{0,3},{1,2},{1,3},{2,3}.
  GraphBuilder b(10);
  const std::pair<int, int> k4_edges[6] = {{0, 1}, {0, 2}, {0, 3},
                                           {1, 2}, {1, 3}, {2, 3}};
  for (int e = 0; e < 6; ++e) {
    b.add_edge(k4_edges[e].first, 4 + e);
    b.add_edge(k4_edges[e].second, 4 + e);
  }
  return b.build();
}

Graph doubled_cycle_incidence(int q) {
  if (q < 3) throw GraphError("doubled cycle needs length >= 3");
  // Edge-slots 0..2q-1 (degree 2), cycle vertices 2q..3q-1 (degree 4).
  GraphBuilder b(3 * q);
  for (int i = 0; i < 2 * q; ++i) {
    const int pos = i / 2;
    b.add_edge(i, 2 * q + pos);
    b.add_edge(i, 2 * q + (pos + 1) % q);
  }
  return b.build();
}

Graph hypercube(int d) {
  if (d < 1 || d > 20) throw GraphError("hypercube dimension out of range");
  GraphBuilder b(1 << d);
  for (int u = 0; u < (1 << d); ++u)
    for (int bit = 0; bit < d; ++bit)
      if (!(u & (1 << bit))) b.add_edge(u, u | (1 << bit));
  return b.build();
}

namespace {

BlockGraph chain_like(const std::vector<Graph>& factors, bool closed) {
  if (factors.size() < (closed ? 3u : 2u))
    throw GraphError(closed ? "cyclic chain needs at least 3 factors"
                            : "chain join needs at least 2 factors");
  int total = 0;
  for (const auto& f : factors) total += f.order();
  GraphBuilder b(total);
  std::vector<Block> blocks;
  int base = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    for (auto [u, v] : f.edges()) b.add_edge(base + u, base + v);
    blocks.push_back({"B" + std::to_string(i), base, base + f.order()});
    base += f.order();
  }
  const auto join_blocks = [&](std::size_t i, std::size_t j) {
    join_ranges(b, blocks[i].begin, blocks[i].end, blocks[j].begin,
                blocks[j].end);
  };
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) join_blocks(i, i + 1);
  if (closed) join_blocks(factors.size() - 1, 0);
  return {b.build(), std::move(blocks)};
}

}  // namespace

BlockGraph chain_join(const std::vector<Graph>& factors) {
  return chain_like(factors, false);
}

BlockGraph cyclic_chain(const std::vector<Graph>& factors) {
  return chain_like(factors, true);
}

Graph join_graphs(const Graph& g, const Graph& h) {
  return chain_join({g, h}).graph;
}

Graph corona_product(const Graph& g, const Graph& h) {
  const int n = g.order(), hn = h.order();
  GraphBuilder b(n * (1 + hn));
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (int i = 0; i < n; ++i) {
    const int base = n + i * hn;
    for (auto [u, v] : h.edges()) b.add_edge(base + u, base + v);
    for (int v = 0; v < hn; ++v) b.add_edge(i, base + v);
  }
  return b.build();
}

Graph tensor_product(const Graph& g, const Graph& h) {
  const int hn = h.order();
  GraphBuilder b(g.order() * hn);
  for (auto [u, v] : g.edges())
    for (auto [a, c] : h.edges()) {
      b.add_edge(u * hn + a, v * hn + c);
      b.add_edge(u * hn + c, v * hn + a);
    }
  return b.build();
}

Graph complement_graph(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) b.add_edge(u, v);
  return b.build();
}

BlockGraph h_graph(int m, const Graph& core, int k, bool swap_sides) {
  require_positive(m, "pad size m");
  require_positive(k, "pad size k");
  if (core.edge_count() == 0) throw GraphError("h_graph: core must be non-empty");
  const auto profile = degree_profile(core);
  if (!profile.biregular)
    throw GraphError("h_graph: core is not biregular bipartite");
  auto bp = *profile.biregular;
  if (swap_sides) {
    std::swap(bp.side1, bp.side2);
    std::swap(bp.t1, bp.t2);
    std::swap(bp.n1, bp.n2);
  }
  if (bp.n1 + m > bp.n2 + k)
    throw GraphError("h_graph: size constraint n1 + m <= n2 + k violated");

  const int n1 = bp.n1, n2 = bp.n2;
  GraphBuilder b(m + n1 + n2 + k);
  // Layout: A = [0, m), B = [m, m+n1), C = [m+n1, m+n1+n2), D = tail.
  std::vector<int> where(core.order(), -1);
  for (int i = 0; i < n1; ++i) where[bp.side1[i]] = m + i;
  for (int i = 0; i < n2; ++i) where[bp.side2[i]] = m + n1 + i;
  for (auto [u, v] : core.edges()) b.add_edge(where[u], where[v]);
  join_ranges(b, 0, m, m, m + n1);                                  // A * B
  join_ranges(b, m + n1, m + n1 + n2, m + n1 + n2, m + n1 + n2 + k);  // C * D
  std::vector<Block> blocks = {
      {"A", 0, m},
      {"B", m, m + n1},
      {"C", m + n1, m + n1 + n2},
      {"D", m + n1 + n2, m + n1 + n2 + k},
  };
  return {b.build(), std::move(blocks)};
}

namespace {

// Shared layout for overlapping-clique chains. Clique i consists of shared
// pair S(i-1), exclusive block X(i), shared pair S(i); a path drops the
// outermost pairs.
BlockGraph clique_chain(const std::vector<int>& sizes, bool ring) {
  const int r = static_cast<int>(sizes.size());
  if (ring && r < 3) throw GraphError("clique ring needs at least 3 cliques");
  if (!ring && r < 2) throw GraphError("clique path needs at least 2 cliques");

  std::vector<Block> blocks;
  int base = 0;
  const int pads = ring ? r : r - 1;
  std::vector<Block> xblocks(r), sblocks(pads);
  for (int i = 0; i < r; ++i) {
    int shared = 0;
    if (ring || i > 0) shared += 2;
    if (ring || i + 1 < r) shared += 2;
    const int excl = sizes[i] - shared;
    if (excl < 0)
      throw GraphError("clique size " + std::to_string(sizes[i]) +
                       " too small for its " + std::to_string(shared) +
                       " shared vertices");
    xblocks[i] = {"X" + std::to_string(i), base, base + excl};
    base += excl;
    if (i < pads) {
      sblocks[i] = {"S" + std::to_string(i), base, base + 2};
      base += 2;
    }
  }

  GraphBuilder b(base);
  auto add_block = [&](std::vector<int>& verts, const Block& blk) {
    for (int v = blk.begin; v < blk.end; ++v) verts.push_back(v);
  };
  for (int i = 0; i < r; ++i) {
    std::vector<int> clique;
    if (ring)
      add_block(clique, sblocks[(i + r - 1) % r]);
    else if (i > 0)
      add_block(clique, sblocks[i - 1]);
    add_block(clique, xblocks[i]);
    if (i < pads) add_block(clique, sblocks[i]);
    clique_range(b, clique);
  }

  for (int i = 0; i < r; ++i) {
    blocks.push_back(xblocks[i]);
    if (i < pads) blocks.push_back(sblocks[i]);
  }
  return {b.build(), std::move(blocks)};
}

std::vector<Graph> empty_factors(const std::vector<int>& sizes) {
  std::vector<Graph> out;
  out.reserve(sizes.size());
  for (int s : sizes) out.push_back(empty_graph(s));
  return out;
}

}  // namespace

BlockGraph clique_path(const std::vector<int>& sizes) {
  return clique_chain(sizes, false);
}

BlockGraph clique_ring(const std::vector<int>& sizes) {
  return clique_chain(sizes, true);
}

BlockGraph g1_family(int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  return chain_join(empty_factors({m, n, m}));
}

BlockGraph g2_family(int m, int n) { return g3_family(2, m, n); }

BlockGraph g3_family(int d, int m, int n) {
  require_positive(m, "m");
  require_positive(n, "n");
  if (d < 2) throw GraphError("g3 family needs d >= 2");
  std::vector<int> sizes;
  for (int i = 0; i < d; ++i) {
    sizes.push_back(m);
    sizes.push_back(n);
  }
  return cyclic_chain(empty_factors(sizes));
}

BlockGraph g4_graph() {
  return cyclic_chain(empty_factors({1, 2, 1, 2, 1, 2, 1, 2}));
}

BlockGraph g5_graph() {
  return cyclic_chain(empty_factors({2, 3, 2, 3, 2, 3}));
}

BlockGraph fig7_family(int n, int d, int m) {
  if (n < 1 || d < 1 || m < 1) throw GraphError("fig7 blocks must be nonempty");
  return chain_join({complete_graph(n), complete_graph(d), complete_graph(m)});
}

BlockGraph fig8_family(int n, int d, int m) {
  if (n < 3 || m < 3)
    throw GraphError("fig8 end cliques need order >= 3");
  if (d < 4) throw GraphError("fig8 middle clique needs order >= 4");
  return clique_path({n, d, m});
}

BlockGraph fig9_family(int n, int m) {
  if (n < 5 || m < 5) throw GraphError("fig9 cliques need order >= 5");
  return clique_ring({m, m, n, n});
}

BlockGraph fig10_family(int n, int m) { return even_chain_family(2, n, m); }

BlockGraph even_chain_family(int k, int n, int m) {
  if (k < 2) throw GraphError("even chain family needs k >= 2");
  if (n < 5 || m < 5) throw GraphError("even chain cliques need order >= 5");
  // Ring of 4k-2 cliques alternating K_m, K_n; opposite exclusive blocks
  // sit at distance 2k and pair an m-clique with an n-clique.
  std::vector<int> sizes;
  for (int i = 0; i < 2 * k - 1; ++i) {
    sizes.push_back(m);
    sizes.push_back(n);
  }
  return clique_ring(sizes);
}

BlockGraph fig11_family(int p, int n, int m) {
  return odd_chain_family(2, p, n, m);
}

BlockGraph odd_chain_family(int k, int p, int n, int m) {
  if (k < 2) throw GraphError("odd chain family needs k >= 2");
  if (p < 4) throw GraphError("odd chain K_p runs need order >= 4");
  if (n < 5 || m < 5) throw GraphError("odd chain end cliques need order >= 5");
  // Path of cliques [p x (k-1), n, p x (k-1), p, p x (k-1), m, p x (k-1)]:
  // the K_n and K_m exclusive blocks sit at distance 2k+1.
  std::vector<int> sizes;
  auto run = [&](int count) {
    for (int i = 0; i < count; ++i) sizes.push_back(p);
  };
  run(k - 1);
  sizes.push_back(n);
  run(k - 1);
  sizes.push_back(p);
  run(k - 1);
  sizes.push_back(m);
  run(k - 1);
  return clique_path(sizes);
}

BlockGraph complete_with_pendants(int q, const std::vector<int>& roots) {
  if (q < 2) throw GraphError("pendant construction needs q >= 2");
  if (roots.empty() || static_cast<int>(roots.size()) > q)
    throw GraphError("pendant construction needs 1..q roots");
  std::set<int> seen;
  for (int r : roots) {
    if (r < 0 || r >= q) throw GraphError("pendant root out of range");
    if (!seen.insert(r).second)
      throw GraphError("pendant roots must be distinct (no shared root)");
  }
  const int extra = static_cast<int>(roots.size());
  GraphBuilder b(q + extra);
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) b.add_edge(u, v);
  for (int i = 0; i < extra; ++i) b.add_edge(roots[i], q + i);
  std::vector<Block> blocks = {{"K", 0, q}, {"P", q, q + extra}};
  return {b.build(), std::move(blocks)};
}

}  // namespace qdb
