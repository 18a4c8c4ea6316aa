#pragma once

#include <string>
#include <string_view>

#include "qdb/graph.hpp"

namespace qdb {

struct ParseError : GraphError {
  using GraphError::GraphError;
};

// Short-format graph6 (orders up to 62), one graph per line.
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

// Plain text edge list: first token is the order, then one "u v" pair per
// line. Duplicate edges collapse; self-loops are rejected.
Graph parse_edge_list(std::string_view text);

}  // namespace qdb
