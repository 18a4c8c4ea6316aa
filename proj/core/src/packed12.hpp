#pragma once

// Internal small-graph machinery shared by canonical labeling, enumeration
// and automorphism search. Not installed.

#include <array>
#include <cstdint>
#include <vector>

#include "qdb/graph.hpp"

namespace qdb::detail {

inline constexpr int kPackedMax = 12;

struct Packed12 {
  int n = 0;
  std::array<std::uint16_t, kPackedMax> adj{};

  bool edge(int u, int v) const { return (adj[u] >> v) & 1; }
  void set_edge(int u, int v) {
    adj[u] |= static_cast<std::uint16_t>(1u << v);
    adj[v] |= static_cast<std::uint16_t>(1u << u);
  }
};

Packed12 pack(const Graph& g);
Graph unpack(const Packed12& p);

// Iterated neighbor-color refinement. Color ids are ranks of the sorted
// (color, neighbor-color multiset) signatures, so they are invariant under
// relabeling.
std::vector<int> refine_colors(const Packed12& g,
                               std::vector<int> colors);

// Lexicographically smallest column-major upper-triangle encoding over all
// relabelings that respect the stable color classes (an isomorphism
// invariant, hence a canonical form).
std::uint64_t canonical_code(const Packed12& g);

Packed12 packed_from_code(int n, std::uint64_t code);

}  // namespace qdb::detail
