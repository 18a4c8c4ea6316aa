// Exercises the installed command surface end to end: exit codes, report
// formats, byte determinism, and the env-var envelope cap.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qdb/constructions.hpp"
#include "qdb/graph6.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_path = "cli_out.tmp";
  const std::string cmd = env + (env.empty() ? "" : " ") +
                          std::string(QDB_CLI_PATH) + " " + args + " > " +
                          out_path + " 2> cli_err.tmp";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out_path);
  return r;
}

}  // namespace

TEST_CASE("classify: verdicts, lambda, exit codes") {
  spit("c4.g6", qdb::to_graph6(qdb::cycle_graph(4)) + "\n");
  auto r = run_cli("classify --n 2 c4.g6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=balanced") != std::string::npos);

  r = run_cli("classify --n 5 c4.g6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=no-pairs") != std::string::npos);

  spit("g5.g6", qdb::to_graph6(qdb::g5_graph().graph) + "\n");
  r = run_cli("classify --n 1 g5.g6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=quasi lambda=8/7") != std::string::npos);
}

TEST_CASE("classify: bad lines are reported and skipped, exit 2") {
  spit("mixed.g6", "!!notgraph6\n" + qdb::to_graph6(qdb::cycle_graph(6)) +
                       "\n");
  const auto r = run_cli("classify --n 1 mixed.g6");
  CHECK(r.exit_code == 2);
  // The valid line still classified.
  CHECK(r.out.find("verdict=balanced") != std::string::npos);
}

TEST_CASE("classify: disconnected graphs reported per graph") {
  spit("disc.g6", qdb::to_graph6(qdb::Graph::from_edges(4, {{0, 1}, {2, 3}})) +
                      "\n" + qdb::to_graph6(qdb::cycle_graph(4)) + "\n");
  const auto r = run_cli("classify --n 1 disc.g6");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("error: graph is disconnected") != std::string::npos);
  CHECK(r.out.find("verdict=balanced") != std::string::npos);
}

TEST_CASE("classify: edge list input is auto-detected") {
  spit("p3.txt", "3\n0 1\n1 2\n");
  const auto r = run_cli("classify --n 1 p3.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=unbalanced") != std::string::npos);
}

TEST_CASE("wsets output") {
  spit("p3.txt", "3\n0 1\n1 2\n");
  auto r = run_cli("wsets --u 0 --v 1 p3.txt");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("Wu={0} Wv={1,2} eq={}") != std::string::npos);
  CHECK(r.out.find("dist=1") != std::string::npos);

  spit("c5.g6", qdb::to_graph6(qdb::cycle_graph(5)) + "\n");
  r = run_cli("wsets --u 0 --v 1 c5.g6");
  CHECK(r.out.find("eq={3}") != std::string::npos);

  r = run_cli("wsets --u 0 --v 9 p3.txt");
  CHECK(r.exit_code == 2);
}

TEST_CASE("construct emits graph6 plus block metadata, re-parseable") {
  auto r = run_cli("construct g1 --m 3 --n 2");
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string g6, comment;
  std::getline(lines, g6);
  std::getline(lines, comment);
  const qdb::Graph g = qdb::parse_graph6(g6);
  CHECK(g.order() == 8);
  CHECK(comment.rfind("# blocks: B0=[0,3) B1=[3,5) B2=[5,8)", 0) == 0);

  r = run_cli("construct hgraph --m 3 --core k4-incidence --k 2");
  std::istringstream hl(r.out);
  std::getline(hl, g6);
  CHECK(qdb::parse_graph6(g6).order() == 15);

  r = run_cli("construct pendants --q 4 --roots 2");
  std::istringstream pl(r.out);
  std::getline(pl, g6);
  CHECK(qdb::parse_graph6(g6).order() == 6);

  // Emitted graph6 feeds straight back into classify.
  spit("constructed.g6", g6 + "\n");
  r = run_cli("classify --n 2 constructed.g6");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verdict=quasi lambda=4/1") != std::string::npos);

  r = run_cli("construct nosuch");
  CHECK(r.exit_code == 2);

  r = run_cli("construct pendants --q 4 --roots 9");
  CHECK(r.exit_code == 2);
}

TEST_CASE("verify exit codes and determinism") {
  auto r = run_cli("verify corona --max-n 3");
  CHECK(r.exit_code == 0);
  const std::string first = r.out;
  r = run_cli("verify corona --max-n 3");
  CHECK(r.out == first);

  r = run_cli("verify bipartite-theorem --max-n 5");
  CHECK(r.exit_code == 0);

  r = run_cli("verify pendant-proposition --max-n 5");
  CHECK(r.exit_code == 0);

  // The h-graph characterization sweep finds genuine counterexamples.
  r = run_cli("verify hgraph-proposition --max-n 6");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("counterexample") != std::string::npos);

  r = run_cli("verify nosuchcheck");
  CHECK(r.exit_code == 2);
}

TEST_CASE("search is deterministic across runs and job counts") {
  const auto a = run_cli("search conjecture --max-n 5");
  CHECK(a.exit_code == 0);
  const auto b = run_cli("search conjecture --max-n 5 --jobs 3");
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());

  const auto c = run_cli("search biregular --max-n 5");
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("lambda=3/2") != std::string::npos);  // K23 line

  const auto d = run_cli("search nosuch");
  CHECK(d.exit_code == 2);
}

TEST_CASE("QDB_MAX_ORDER lowers the envelope") {
  const auto capped = run_cli("search conjecture --max-n 6",
                              "QDB_MAX_ORDER=4");
  const auto direct = run_cli("search conjecture --max-n 4");
  CHECK(capped.out == direct.out);
}

TEST_CASE("findings can stream to a file") {
  const auto r = run_cli("verify corona --max-n 2 --out findings.tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const std::string file = slurp("findings.tsv");
  CHECK(file.find("corona\t") != std::string::npos);
  std::remove("findings.tsv");
}

TEST_CASE("formats help prints") {
  const auto r = run_cli("formats");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("graph6") != std::string::npos);
  CHECK(r.out.find("edgelist") != std::string::npos);
}
