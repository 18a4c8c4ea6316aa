#include "qdb/balance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace qdb {

WPartition w_partition(const Graph& g, const DistanceMatrix& d, int u, int v) {
  if (g.order() != d.order())
    throw GraphError("w_partition: graph and distance matrix disagree on order");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw GraphError("w_partition: vertex out of range");
  if (u == v) throw GraphError("w_partition: u and v must differ");
  WPartition w;
  w.u = u;
  w.v = v;
  w.n = d(u, v);
  for (int x = 0; x < g.order(); ++x) {
    const int du = d(x, u), dv = d(x, v);
    if (du < dv)
      w.closer_to_u.push_back(x);
    else if (dv < du)
      w.closer_to_v.push_back(x);
    else
      w.equidistant.push_back(x);
  }
  return w;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::balanced: return "balanced";
    case Verdict::quasi_balanced: return "quasi";
    case Verdict::unbalanced: return "unbalanced";
    case Verdict::no_pairs: return "no-pairs";
  }
  return "?";
}

std::pair<Verdict, std::optional<Rational>> verdict_from_pairs(
    const std::vector<PairCount>& pairs) {
  if (pairs.empty()) return {Verdict::no_pairs, std::nullopt};
  bool all_equal = true;
  std::optional<Rational> lambda;
  bool consistent = true;
  for (const auto& p : pairs) {
    if (p.closer_u == p.closer_v) {
      consistent = false;  // a 1:1 pair can never realize lambda > 1
      continue;
    }
    all_equal = false;
    const Rational r(std::max(p.closer_u, p.closer_v),
                     std::min(p.closer_u, p.closer_v));
    if (!lambda)
      lambda = r;
    else if (*lambda != r)
      consistent = false;
  }
  if (all_equal) return {Verdict::balanced, std::nullopt};
  if (consistent && lambda) return {Verdict::quasi_balanced, lambda};
  return {Verdict::unbalanced, std::nullopt};
}

BalanceReport classify(const Graph& g, const DistanceMatrix& d, int n) {
  if (n < 1) throw GraphError("classify: n must be at least 1");
  BalanceReport report;
  report.n = n;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (d(u, v) != n) continue;
      PairCount pc;
      pc.u = u;
      pc.v = v;
      for (int x = 0; x < g.order(); ++x) {
        const int du = d(x, u), dv = d(x, v);
        if (du < dv)
          ++pc.closer_u;
        else if (dv < du)
          ++pc.closer_v;
        else
          ++pc.equidistant;
      }
      report.pairs.push_back(pc);
    }
  }
  std::tie(report.verdict, report.lambda) = verdict_from_pairs(report.pairs);
  return report;
}

BalanceReport classify(const Graph& g, int n) {
  return classify(g, all_pairs_distances(g), n);
}

std::string BalanceReport::to_text() const {
  std::ostringstream out;
  out << "n=" << n << " verdict=" << verdict_name(verdict);
  if (lambda) out << " lambda=" << lambda->str();
  out << '\n';
  for (const auto& p : pairs)
    out << p.u << ' ' << p.v << ' ' << p.closer_u << ' ' << p.closer_v << ' '
        << p.equidistant << '\n';
  return out.str();
}

int total_distance(const Graph& g, const DistanceMatrix& d, int u) {
  if (u < 0 || u >= g.order()) throw GraphError("total_distance: vertex out of range");
  int sum = 0;
  for (int x = 0; x < d.order(); ++x) sum += d(u, x);
  return sum;
}

bool is_transmission_regular(const Graph& g) {
  const auto d = all_pairs_distances(g);
  const int first = total_distance(g, d, 0);
  for (int u = 1; u < g.order(); ++u)
    if (total_distance(g, d, u) != first) return false;
  return true;
}

std::vector<std::pair<int, int>> parity_check(const Graph& g) {
  const auto d = all_pairs_distances(g);
  if (classify(g, d, 1).verdict != Verdict::quasi_balanced)
    throw GraphError("parity_check: graph must classify quasi-balanced at n=1");
  std::vector<int> td(g.order());
  for (int u = 0; u < g.order(); ++u) td[u] = total_distance(g, d, u);
  std::vector<std::pair<int, int>> violations;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (d(u, v) == 2 && (td[u] + td[v]) % 2 != 0)
        violations.emplace_back(u, v);
  return violations;
}

namespace {

// Degree set of one side; nullopt when mixed.
std::optional<int> uniform_degree(const Graph& g, const std::vector<int>& side) {
  std::optional<int> deg;
  for (int v : side) {
    const int d = g.degree(v);
    if (!deg)
      deg = d;
    else if (*deg != d)
      return std::nullopt;
  }
  return deg ? deg : std::optional<int>(0);
}

}  // namespace

DegreeProfile degree_profile(const Graph& g) {
  DegreeProfile profile;
  std::set<int> degs;
  for (int u = 0; u < g.order(); ++u) degs.insert(g.degree(u));
  profile.distinct_degrees.assign(degs.begin(), degs.end());

  const auto coloring = bipartition(g);
  if (!coloring) return profile;

  // Per-component colorings can flip independently; search for one flip
  // assignment that makes both global sides constant-degree.
  const auto comps = components(g);
  struct SideDegrees {
    std::optional<int> d0, d1;  // uniform degree of color-0 / color-1 part
  };
  std::vector<SideDegrees> per_comp;
  for (const auto& comp : comps) {
    std::vector<int> c0, c1;
    for (int v : comp) ((*coloring)[v] == 0 ? c0 : c1).push_back(v);
    SideDegrees sd;
    sd.d0 = c0.empty() ? std::optional<int>(-1) : uniform_degree(g, c0);
    sd.d1 = c1.empty() ? std::optional<int>(-1) : uniform_degree(g, c1);
    per_comp.push_back(sd);
  }

  auto try_assignment = [&](int t1, int t2) -> bool {
    std::vector<bool> flip(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      const auto& sd = per_comp[i];
      auto fits = [&](std::optional<int> a, std::optional<int> b) {
        return a && b && (*a == t1 || *a == -1) && (*b == t2 || *b == -1);
      };
      if (fits(sd.d0, sd.d1))
        flip[i] = false;
      else if (fits(sd.d1, sd.d0))
        flip[i] = true;
      else
        return false;
    }
    BiregularBipartition bp;
    bp.t1 = t1;
    bp.t2 = t2;
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (int v : comps[i]) {
        const bool side1 = ((*coloring)[v] == 0) != flip[i];
        (side1 ? bp.side1 : bp.side2).push_back(v);
      }
    std::sort(bp.side1.begin(), bp.side1.end());
    std::sort(bp.side2.begin(), bp.side2.end());
    bp.n1 = static_cast<int>(bp.side1.size());
    bp.n2 = static_cast<int>(bp.side2.size());
    if (bp.n1 == 0 || bp.n2 == 0) return false;
    profile.biregular = std::move(bp);
    return true;
  };

  // Candidate side degrees come from the first component's two options.
  const auto& first = per_comp[0];
  if (first.d0 && first.d1) {
    const int a = *first.d0, b = *first.d1;
    std::vector<std::pair<int, int>> cands;
    if (a >= 0 && b >= 0) cands = {{a, b}, {b, a}};
    else if (a >= 0) cands = {{a, a}};  // single-vertex side, degree 0 graph
    for (auto [t1, t2] : cands)
      if (t1 >= 0 && t2 >= 0 && try_assignment(t1, t2)) break;
  }
  return profile;
}

std::optional<std::pair<int, int>> k1k2_regular(const Graph& g) {
  std::set<int> degs;
  for (int u = 0; u < g.order(); ++u) degs.insert(g.degree(u));
  if (degs.size() != 2) return std::nullopt;
  for (auto [u, v] : g.edges())
    if (g.degree(u) == g.degree(v)) return std::nullopt;
  const int lo = *degs.begin(), hi = *degs.rbegin();
  return std::make_pair(hi, lo);
}

std::vector<int> d_set(const Graph& g, const DistanceMatrix& d, int x, int y,
                       int i, int j) {
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw GraphError("d_set: vertex out of range");
  std::vector<int> out;
  for (int u = 0; u < g.order(); ++u)
    if (d(u, x) == i && d(u, y) == j) out.push_back(u);
  return out;
}

}  // namespace qdb
