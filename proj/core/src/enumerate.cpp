#include "qdb/enumerate.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "packed12.hpp"
#include "qdb/graph6.hpp"

namespace qdb {

namespace {
// 66 upper-triangle bits would overflow the packed code at order 12.
constexpr int kCanonicalMaxOrder = 11;
}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw GraphError("canonical_code supports orders up to 11");
  return detail::canonical_code(detail::pack(g));
}

Graph graph_from_code(int order, std::uint64_t code) {
  return detail::unpack(detail::packed_from_code(order, code));
}

namespace {

std::vector<std::uint64_t> augment_level(
    const std::vector<std::uint64_t>& parents, int order, int jobs) {
  // Every order-n graph contains an (n-1)-vertex induced subgraph, so
  // extending each parent representative by one vertex with every possible
  // neighborhood covers all isomorphism classes.
  const int parent_order = order - 1;
  const std::uint32_t masks = 1u << parent_order;
  jobs = std::max(1, jobs);

  auto worker = [&](std::size_t begin, std::size_t end,
                    std::unordered_set<std::uint64_t>& out) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto parent = detail::packed_from_code(parent_order, parents[idx]);
      for (std::uint32_t mask = 0; mask < masks; ++mask) {
        detail::Packed12 child = parent;
        child.n = order;
        for (int v = 0; v < parent_order; ++v)
          if (mask & (1u << v)) child.set_edge(v, parent_order);
        out.insert(detail::canonical_code(child));
      }
    }
  };

  std::unordered_set<std::uint64_t> merged;
  if (jobs == 1 || parents.size() < 64) {
    worker(0, parents.size(), merged);
  } else {
    std::vector<std::unordered_set<std::uint64_t>> partial(jobs);
    std::vector<std::thread> threads;
    const std::size_t chunk = (parents.size() + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(parents.size(), begin + chunk);
      if (begin >= end) break;
      threads.emplace_back(worker, begin, end, std::ref(partial[t]));
    }
    for (auto& th : threads) th.join();
    for (auto& p : partial) merged.merge(p);
  }

  std::vector<std::uint64_t> codes(merged.begin(), merged.end());
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::mutex g_code_cache_mutex;
std::map<int, std::vector<std::uint64_t>> g_code_cache;

}  // namespace

const std::vector<std::uint64_t>& all_graph_codes(int order, int jobs) {
  if (order < 1 || order > kEnumerationMaxOrder)
    throw GraphError("enumeration order out of the 1..10 envelope");
  std::lock_guard<std::mutex> lock(g_code_cache_mutex);
  if (!g_code_cache.count(1))
    g_code_cache.emplace(1, std::vector<std::uint64_t>{0});
  for (int k = 2; k <= order; ++k)
    if (!g_code_cache.count(k))
      g_code_cache.emplace(k, augment_level(g_code_cache.at(k - 1), k, jobs));
  return g_code_cache.at(order);
}

bool scope_admits(const EnumerationScope& scope, const Graph& g) {
  if (g.order() > scope.max_order) return false;
  if (scope.connected && !is_connected(g)) return false;
  if (scope.bipartite && *scope.bipartite != is_bipartite(g)) return false;
  if (scope.min_degree > 0) {
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) < scope.min_degree) return false;
  }
  if (scope.degree_set_size) {
    auto ds = degree_multiset(g);
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (static_cast<int>(ds.size()) != *scope.degree_set_size) return false;
  }
  return true;
}

void enumerate_graphs(const EnumerationScope& scope,
                      const std::function<void(const Graph&)>& sink,
                      int jobs) {
  if (scope.max_order < 1 || scope.max_order > kEnumerationMaxOrder)
    throw GraphError("enumeration scope exceeds the order-10 envelope");
  for (int order = 1; order <= scope.max_order; ++order) {
    for (std::uint64_t code : all_graph_codes(order, jobs)) {
      Graph g = graph_from_code(order, code);
      if (scope_admits(scope, g)) sink(g);
    }
  }
}

std::vector<Graph> enumerate_connected(const EnumerationScope& scope,
                                       int jobs) {
  EnumerationScope s = scope;
  s.connected = true;
  std::vector<Graph> out;
  enumerate_graphs(s, [&](const Graph& g) { out.push_back(g); }, jobs);
  return out;
}

std::vector<Graph> read_graph6_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph6 file: " + path);
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace qdb
