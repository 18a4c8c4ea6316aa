#include "qdb/graph6.hpp"

#include <cctype>
#include <sstream>
#include <string>

namespace qdb {

namespace {
constexpr int kMaxShortOrder = 62;
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) throw ParseError("graph6: empty line");
  for (char c : line)
    if (c < 63 || c > 126)
      throw ParseError("graph6: character out of range 63..126: '" +
                       std::string(1, c) + "'");
  const int n = line[0] - 63;
  if (n > kMaxShortOrder)
    throw ParseError("graph6: header encodes order > 62 (long formats unsupported)");
  if (n < 1) throw ParseError("graph6: header encodes order 0");

  const int nbits = n * (n - 1) / 2;
  const int need = (nbits + 5) / 6;
  if (static_cast<int>(line.size()) - 1 < need)
    throw ParseError("graph6: truncated bit payload");
  if (static_cast<int>(line.size()) - 1 > need)
    throw ParseError("graph6: payload longer than order requires");

  GraphBuilder b(n);
  int k = 0;  // bit cursor, column-major upper triangle
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  for (; k < need * 6; ++k) {
    const int byte = line[1 + k / 6] - 63;
    if ((byte >> (5 - k % 6)) & 1)
      throw ParseError("graph6: nonzero padding bit");
  }
  return b.build();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxShortOrder)
    throw GraphError("graph6: order " + std::to_string(n) +
                     " exceeds the short-format limit of 62");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long order = -1;
  if (!(in >> order)) throw ParseError("edge list: missing order token");
  if (order < 1) throw ParseError("edge list: order must be at least 1");

  GraphBuilder b(static_cast<int>(order));
  std::string tok_u, tok_v;
  while (in >> tok_u) {
    if (!(in >> tok_v)) throw ParseError("edge list: dangling endpoint '" + tok_u + "'");
    auto parse_vertex = [&](const std::string& tok) {
      std::size_t pos = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &pos);
      } catch (const std::exception&) {
        throw ParseError("edge list: non-integer token '" + tok + "'");
      }
      if (pos != tok.size())
        throw ParseError("edge list: non-integer token '" + tok + "'");
      if (value < 0 || value >= order)
        throw ParseError("edge list: vertex " + tok + " out of range 0.." +
                         std::to_string(order - 1));
      return static_cast<int>(value);
    };
    const int u = parse_vertex(tok_u);
    const int v = parse_vertex(tok_v);
    if (u == v) throw ParseError("edge list: self-loop at vertex " + tok_u);
    b.add_edge(u, v);
  }
  return b.build();
}

}  // namespace qdb
