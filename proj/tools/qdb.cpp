// qdb: classify graphs by distance-balance properties, build the named
// construction families, and run exhaustive verification/search sweeps.
//
// Exit codes: 0 clean; 1 a verify run emitted counterexamples; 2 usage or
// input error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qdb/automorphism.hpp"
#include "qdb/balance.hpp"
#include "qdb/checks.hpp"
#include "qdb/constructions.hpp"
#include "qdb/enumerate.hpp"
#include "qdb/graph6.hpp"

namespace {

struct InputGraph {
  qdb::Graph graph;
  int lineno;  // 0 for whole-file inputs
};

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw qdb::GraphError("cannot open input: " + path);
  return read_stream(in);
}

// graph6 is one graph per line; an edge list is a whole-file graph whose
// first token is a number (graph6 bytes are all >= '?').
std::string detect_format(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return (c >= '0' && c <= '9') ? "edgelist" : "graph6";
  }
  return "graph6";
}

std::vector<InputGraph> load_graphs(const std::string& path,
                                    std::string format, int& errors) {
  const std::string text = read_input(path);
  if (format == "auto") format = detect_format(text);
  std::vector<InputGraph> out;
  if (format == "edgelist") {
    out.push_back({qdb::parse_edge_list(text), 0});
    return out;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back({qdb::parse_graph6(line), lineno});
    } catch (const qdb::ParseError& e) {
      std::cerr << path << ":" << lineno << ": error: " << e.what() << "\n";
      ++errors;
    }
  }
  return out;
}

int env_max_order_cap() {
  const char* env = std::getenv("QDB_MAX_ORDER");
  if (!env) return qdb::kEnumerationMaxOrder;
  const int cap = std::atoi(env);
  if (cap < 1) return qdb::kEnumerationMaxOrder;
  // The env var may lower the envelope, never raise it.
  return std::min(cap, qdb::kEnumerationMaxOrder);
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stoi(item));
  }
  return out;
}

// Factor DSL for chain/ring: "3K1" (empty on 3), "K4" (complete), "C5".
qdb::Graph parse_factor(const std::string& spec) {
  if (spec.empty()) throw qdb::GraphError("empty factor spec");
  try {
    if (spec.size() > 2 && (spec.substr(spec.size() - 2) == "K1" ||
                            spec.substr(spec.size() - 2) == "k1"))
      return qdb::empty_graph(std::stoi(spec.substr(0, spec.size() - 2)));
    if (spec[0] == 'K' || spec[0] == 'k')
      return qdb::complete_graph(std::stoi(spec.substr(1)));
    if (spec[0] == 'C' || spec[0] == 'c')
      return qdb::cycle_graph(std::stoi(spec.substr(1)));
  } catch (const std::invalid_argument&) {
  }
  throw qdb::GraphError("bad factor spec '" + spec +
                        "' (use <m>K1, K<q> or C<q>)");
}

qdb::Graph parse_core(const std::string& spec) {
  if (spec == "k4-incidence") return qdb::incidence_k4();
  if (spec == "cube") return qdb::hypercube(3);
  if (spec.rfind("c", 0) == 0 && spec.size() > 1 &&
      std::isdigit(static_cast<unsigned char>(spec[1])))
    return qdb::cycle_graph(std::stoi(spec.substr(1)));
  if (spec.rfind("kbip:", 0) == 0) {
    const auto parts = parse_int_list(spec.substr(5));
    if (parts.size() == 2) return qdb::complete_bipartite(parts[0], parts[1]);
  }
  if (spec.rfind("g6:", 0) == 0) return qdb::parse_graph6(spec.substr(3));
  throw qdb::GraphError(
      "unknown core '" + spec +
      "' (use k4-incidence, cube, c<len>, kbip:<a>,<b> or g6:<string>)");
}

void emit_findings(const std::vector<qdb::Finding>& findings,
                   const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw qdb::GraphError("cannot open output file: " + out_path);
    out = &file;
  }
  for (const auto& f : findings) *out << qdb::to_tsv_line(f) << "\n";
}

int run_classify(const std::string& input, const std::string& format, int n) {
  int errors = 0;
  const auto graphs = load_graphs(input, format, errors);
  for (const auto& in : graphs) {
    if (in.lineno > 0)
      std::cout << "# line " << in.lineno << "\n";
    try {
      std::cout << qdb::classify(in.graph, n).to_text();
    } catch (const qdb::DisconnectedGraphError& e) {
      std::cout << "error: " << e.what() << "\n";
      ++errors;
    }
    std::cout << "\n";
  }
  return errors > 0 ? 2 : 0;
}

int run_wsets(const std::string& input, const std::string& format, int u,
              int v) {
  int errors = 0;
  const auto graphs = load_graphs(input, format, errors);
  if (graphs.empty() || errors > 0) return 2;
  const auto& g = graphs.front().graph;
  const auto d = qdb::all_pairs_distances(g);
  const auto w = qdb::w_partition(g, d, u, v);
  auto set_text = [](const std::vector<int>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(xs[i]);
    }
    return s + "}";
  };
  std::cout << "dist=" << w.n << " Wu=" << set_text(w.closer_to_u)
            << " Wv=" << set_text(w.closer_to_v)
            << " eq=" << set_text(w.equidistant)
            << " |Wu|=" << w.closer_to_u.size()
            << " |Wv|=" << w.closer_to_v.size()
            << " |eq|=" << w.equidistant.size() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"distance-balance graph analyzer"};
  app.require_subcommand(1);

  std::string input = "-";
  std::string format = "auto";
  int n = 1;
  int u = 0, v = 1;
  int max_n = -1;
  int jobs = 1;
  std::string out_path;
  std::string ingest;

  auto* classify_cmd =
      app.add_subcommand("classify", "classify graphs at pair distance n");
  classify_cmd->add_option("input", input, "input file, or - for stdin");
  classify_cmd->add_option("--format", format, "graph6|edgelist|auto");
  classify_cmd->add_option("--n", n, "pair distance (default 1)");

  auto* wsets_cmd =
      app.add_subcommand("wsets", "print the W-partition of a vertex pair");
  wsets_cmd->add_option("input", input, "input file, or - for stdin");
  wsets_cmd->add_option("--format", format, "graph6|edgelist|auto");
  wsets_cmd->add_option("--u", u, "first vertex")->required();
  wsets_cmd->add_option("--v", v, "second vertex")->required();

  auto* construct_cmd =
      app.add_subcommand("construct", "emit a construction family as graph6");
  std::string family;
  int fm = 3, fn = 2, fk = 2, fd = 3, fp = 4, fq = 4, fa = 2, fb = 3;
  int roots = 1;
  bool swap_sides = false;
  std::string core_spec = "k4-incidence";
  std::string sizes_csv, factors_csv;
  construct_cmd->add_option("family", family,
                            "g1|g2|g3|g4|g5|hgraph|fig7|fig8|fig9|fig10|even|"
                            "fig11|odd|pendants|chain|ring|clique-path|"
                            "clique-ring|empty|complete|cycle|path|star|"
                            "kbipartite|k4-incidence")
      ->required();
  construct_cmd->add_option("--m", fm, "family parameter m");
  construct_cmd->add_option("--n", fn, "family parameter n");
  construct_cmd->add_option("--k", fk, "family parameter k");
  construct_cmd->add_option("--d", fd, "family parameter d");
  construct_cmd->add_option("--p", fp, "family parameter p");
  construct_cmd->add_option("--q", fq, "order parameter q");
  construct_cmd->add_option("--a", fa, "bipartite side a");
  construct_cmd->add_option("--b", fb, "bipartite side b");
  construct_cmd->add_option("--roots", roots, "number of pendant roots");
  construct_cmd->add_option("--core", core_spec, "h-graph core");
  construct_cmd->add_flag("--swap-sides", swap_sides,
                          "swap the h-graph core sides");
  construct_cmd->add_option("--sizes", sizes_csv,
                            "clique sizes, comma separated");
  construct_cmd->add_option("--factors", factors_csv,
                            "chain factors, e.g. 3K1,2K1,3K1");

  auto* verify_cmd = app.add_subcommand(
      "verify",
      "run a verification check; exit 1 if counterexamples are found");
  std::string check_name;
  verify_cmd->add_option("check", check_name,
                         "bipartite-theorem|edge-removal|corona|tensor|"
                         "pendant-proposition|hgraph-proposition")
      ->required();
  verify_cmd->add_option("--max-n", max_n, "scope bound (order or factor order)");
  verify_cmd->add_option("--jobs", jobs, "worker threads");
  verify_cmd->add_option("--out", out_path, "findings file (default stdout)");
  verify_cmd->add_option("--ingest", ingest, "graph6 file replacing enumeration");

  auto* search_cmd = app.add_subcommand(
      "search", "run an open-problem search; findings are data, exit 0");
  std::string target;
  search_cmd->add_option("target", target,
                         "conjecture|biregular|edge-transitive")
      ->required();
  search_cmd->add_option("--max-n", max_n, "maximum graph order");
  search_cmd->add_option("--jobs", jobs, "worker threads");
  search_cmd->add_option("--out", out_path, "findings file (default stdout)");
  search_cmd->add_option("--ingest", ingest, "graph6 file replacing enumeration");

  auto* formats_cmd =
      app.add_subcommand("formats", "describe the supported file formats");

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify_cmd->parsed()) return run_classify(input, format, n);
    if (wsets_cmd->parsed()) return run_wsets(input, format, u, v);

    if (construct_cmd->parsed()) {
      qdb::BlockGraph bg{qdb::Graph(1), {}};
      if (family == "g1") bg = qdb::g1_family(fm, fn);
      else if (family == "g2") bg = qdb::g2_family(fm, fn);
      else if (family == "g3") bg = qdb::g3_family(fd, fm, fn);
      else if (family == "g4") bg = qdb::g4_graph();
      else if (family == "g5") bg = qdb::g5_graph();
      else if (family == "hgraph")
        bg = qdb::h_graph(fm, parse_core(core_spec), fk, swap_sides);
      else if (family == "fig7") bg = qdb::fig7_family(fn, fd, fm);
      else if (family == "fig8") bg = qdb::fig8_family(fn, fd, fm);
      else if (family == "fig9") bg = qdb::fig9_family(fn, fm);
      else if (family == "fig10") bg = qdb::fig10_family(fn, fm);
      else if (family == "even") bg = qdb::even_chain_family(fk, fn, fm);
      else if (family == "fig11") bg = qdb::fig11_family(fp, fn, fm);
      else if (family == "odd") bg = qdb::odd_chain_family(fk, fp, fn, fm);
      else if (family == "pendants") {
        std::vector<int> root_ids(roots);
        for (int i = 0; i < roots; ++i) root_ids[i] = i;
        bg = qdb::complete_with_pendants(fq, root_ids);
      } else if (family == "chain" || family == "ring") {
        std::vector<qdb::Graph> factors;
        std::stringstream ss(factors_csv);
        std::string item;
        while (std::getline(ss, item, ','))
          if (!item.empty()) factors.push_back(parse_factor(item));
        bg = family == "chain" ? qdb::chain_join(factors)
                               : qdb::cyclic_chain(factors);
      } else if (family == "clique-path")
        bg = qdb::clique_path(parse_int_list(sizes_csv));
      else if (family == "clique-ring")
        bg = qdb::clique_ring(parse_int_list(sizes_csv));
      else if (family == "empty")
        bg = {qdb::empty_graph(fq), {{"V", 0, fq}}};
      else if (family == "complete")
        bg = {qdb::complete_graph(fq), {{"V", 0, fq}}};
      else if (family == "cycle")
        bg = {qdb::cycle_graph(fq), {{"V", 0, fq}}};
      else if (family == "path")
        bg = {qdb::path_graph(fq), {{"V", 0, fq}}};
      else if (family == "star")
        bg = {qdb::star_graph(fq), {{"center", 0, 1}, {"leaves", 1, fq + 1}}};
      else if (family == "kbipartite")
        bg = {qdb::complete_bipartite(fa, fb),
              {{"A", 0, fa}, {"B", fa, fa + fb}}};
      else if (family == "k4-incidence")
        bg = {qdb::incidence_k4(), {{"V", 0, 4}, {"E", 4, 10}}};
      else {
        std::cerr << "error: unknown family '" << family << "'\n";
        return 2;
      }
      std::cout << qdb::to_graph6(bg.graph) << "\n"
                << bg.blocks_comment() << "\n";
      return 0;
    }

    if (verify_cmd->parsed()) {
      const int cap = env_max_order_cap();
      qdb::CheckOptions opts;
      opts.jobs = jobs;
      if (!ingest.empty()) opts.ingest_path = ingest;
      std::vector<qdb::Finding> findings;
      if (check_name == "bipartite-theorem" || check_name == "edge-removal" ||
          check_name == "pendant-proposition") {
        qdb::EnumerationScope scope;
        scope.max_order = std::min(max_n < 0 ? 7 : max_n, cap);
        if (check_name == "bipartite-theorem")
          findings = qdb::check_bipartite_theorem(scope, opts);
        else if (check_name == "edge-removal")
          findings = qdb::check_edge_removal(scope, opts);
        else
          findings = qdb::check_pendant_proposition(scope, opts);
      } else if (check_name == "corona") {
        findings = qdb::check_corona(std::min(max_n < 0 ? 4 : max_n, cap));
      } else if (check_name == "tensor") {
        findings = qdb::check_tensor(std::min(max_n < 0 ? 5 : max_n, cap));
      } else if (check_name == "hgraph-proposition") {
        findings = qdb::check_hgraph_proposition(max_n < 0 ? 12 : max_n);
      } else {
        std::cerr << "error: unknown check '" << check_name << "'\n";
        return 2;
      }
      emit_findings(findings, out_path);
      std::cerr << findings.size() << " findings\n";
      return qdb::any_counterexample(findings) ? 1 : 0;
    }

    if (search_cmd->parsed()) {
      const int cap = env_max_order_cap();
      qdb::CheckOptions opts;
      opts.jobs = jobs;
      if (!ingest.empty()) opts.ingest_path = ingest;
      qdb::EnumerationScope scope;
      scope.max_order = std::min(max_n < 0 ? 8 : max_n, cap);
      std::vector<qdb::Finding> findings;
      if (target == "conjecture")
        findings = qdb::search_conjecture(scope, opts);
      else if (target == "biregular")
        findings = qdb::search_problem_biregular(scope, opts);
      else if (target == "edge-transitive")
        findings = qdb::search_problem_edge_transitive(scope, opts);
      else {
        std::cerr << "error: unknown search target '" << target << "'\n";
        return 2;
      }
      emit_findings(findings, out_path);
      std::cerr << findings.size() << " findings\n";
      return 0;
    }

    if (formats_cmd->parsed()) {
      std::cout <<
          "input formats\n"
          "  graph6    one graph per line, short format (order <= 62);\n"
          "            bytes 63..126, header byte = 63 + order, then the\n"
          "            upper triangle column by column, 6 bits per byte.\n"
          "  edgelist  whole file is one graph: first token is the order,\n"
          "            then one 'u v' pair per edge (0-based, no loops).\n"
          "  Detection: --format auto treats a leading digit as edgelist.\n"
          "\n"
          "report format (classify)\n"
          "  header 'n=<n> verdict=<balanced|quasi|unbalanced|no-pairs>\n"
          "  [lambda=<p>/<q>]' then one 'u v |Wu| |Wv| |eq|' line per pair.\n"
          "\n"
          "findings format (verify/search)\n"
          "  tab-separated: check name, graph6, verdict\n"
          "  (confirmed|counterexample|mismatch), detail.\n"
          "\n"
          "environment\n"
          "  QDB_MAX_ORDER caps every enumeration scope (never raises it).\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
