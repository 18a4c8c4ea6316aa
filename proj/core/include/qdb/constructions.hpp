#pragma once

#include <string>
#include <vector>

#include "qdb/graph.hpp"

namespace qdb {

struct Block {
  std::string label;
  int begin = 0, end = 0;  // half-open vertex range
  int size() const { return end - begin; }
};

// A graph together with the contiguous vertex blocks its builder laid out,
// so callers can address e.g. "a vertex of the K_n block" deterministically.
struct BlockGraph {
  Graph graph;
  std::vector<Block> blocks;

  const Block& block(const std::string& label) const;
  std::string blocks_comment() const;  // "# blocks: A=[0,3) B=[3,7) ..."
};

Graph empty_graph(int m);
Graph complete_graph(int q);
Graph cycle_graph(int q);  // q >= 3
Graph path_graph(int q);
Graph star_graph(int leaves);  // center is vertex 0
Graph complete_bipartite(int a, int b);
// Vertex-edge incidence graph of K4: (3,2)-biregular, sides 4 and 6.
// Vertices 0..3 are the K4 vertices, 4..9 its edges in lexicographic order.
Graph incidence_k4();
// Incidence graph of a cycle C_q with every edge doubled: (2,4)-biregular
// on 3q vertices (2q edge-slots of degree 2, q cycle vertices of degree 4).
Graph doubled_cycle_incidence(int q);
Graph hypercube(int d);

// Consecutive factors fully joined (factor i to factor i+1 only); block
// labels B0, B1, ... in list order.
BlockGraph chain_join(const std::vector<Graph>& factors);
// chain_join plus all edges between the last and first factor; >= 3 factors.
BlockGraph cyclic_chain(const std::vector<Graph>& factors);

Graph join_graphs(const Graph& g, const Graph& h);
// One copy of g plus |V(g)| copies of h, vertex i of g joined to copy i.
// Layout: g's vertices first, then the copies in order.
Graph corona_product(const Graph& g, const Graph& h);
// Direct product: (u,a) ~ (v,b) iff uv in E(g) and ab in E(h).
// Vertex (u,a) has index u*|V(h)| + a.
Graph tensor_product(const Graph& g, const Graph& h);
Graph complement_graph(const Graph& g);

// H(m, core, k): pad A (m fresh vertices) fully joined to side B of a
// biregular bipartite core, pad D (k vertices) fully joined to side C.
// Side B is the coloring-0 side of the core's bipartition unless
// swap_sides is set. Layout: A, B, C, D. Requires n1 + m <= n2 + k.
BlockGraph h_graph(int m, const Graph& core, int k, bool swap_sides = false);

// Path / ring of complete graphs K_{sizes[i]} in which consecutive cliques
// overlap in a shared edge (two vertices). Layout interleaves exclusive
// blocks X<i> with shared pairs S<i>; clique i spans S<i-1>, X<i>, S<i>.
BlockGraph clique_path(const std::vector<int>& sizes);
BlockGraph clique_ring(const std::vector<int>& sizes);  // >= 3 cliques

// Diameter-2/3/d families built from empty blocks.
BlockGraph g1_family(int m, int n);          // mK1 * nK1 * mK1
BlockGraph g2_family(int m, int n);          // ring of m,n,m,n empty blocks
BlockGraph g3_family(int d, int m, int n);   // ring of 2d alternating blocks
BlockGraph g4_graph();                       // ring (1,2)x4, order 12
BlockGraph g5_graph();                       // ring (2,3)x3, order 15

// Complete-block families with designated end blocks at distance 2..2k+1.
BlockGraph fig7_family(int n, int d, int m);       // K_n * K_d * K_m, distance 2
BlockGraph fig8_family(int n, int d, int m);       // clique path [n,d,m], distance 3
BlockGraph fig9_family(int n, int m);              // clique ring [m,m,n,n], distance 3
BlockGraph fig10_family(int n, int m);             // even_chain_family(2, n, m)
BlockGraph even_chain_family(int k, int n, int m); // ring of 4k-2 alternating cliques
BlockGraph fig11_family(int p, int n, int m);      // odd_chain_family(2, p, n, m)
// Clique path [p x (k-1), n, p x (k-1), p, p x (k-1), m, p x (k-1)];
// the K_n and K_m blocks sit at distance 2k+1.
BlockGraph odd_chain_family(int k, int p, int n, int m);

// K_q plus one pendant on each listed root; roots must be distinct.
// Layout: the clique, then pendants in root order.
BlockGraph complete_with_pendants(int q, const std::vector<int>& roots);

}  // namespace qdb
