#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <sstream>

#include "tcedit/cli.hpp"
#include "tcedit/io.hpp"

using namespace tcedit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : root_(fs::temp_directory_path() / ("tcedit_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(root_);
  }
  ~TempDir() { fs::remove_all(root_); }

  std::string write(const std::string& name, const std::string& text) const {
    const std::string p = path(name);
    write_text_file(p, text);
    return p;
  }
  std::string path(const std::string& name) const { return (root_ / name).string(); }

 private:
  fs::path root_;
};

const char* kP4 = "4 3\n0 1\n1 2\n2 3\n";
const char* kC4 = "4 4\n0 1\n1 2\n2 3\n0 3\n";

}  // namespace

TEST_CASE("solve a path on four vertices") {
  TempDir dir;
  const std::string p4 = dir.write("p4.graph", kP4);
  const Run r = run({"solve", "--target", "threshold", "--variant", "edit", "-k", "1", p4});
  CHECK(r.code == kExitYes);
  CHECK(r.out.rfind("optimum 1\n", 0) == 0);
  const SolutionFile sol = parse_solution(r.out.substr(r.out.find('\n') + 1));
  CHECK(sol.edits.size() == 1);
  CHECK(sol.k_used == 1);

  const std::string c4 = dir.write("c4.graph", kC4);
  const Run no = run({"solve", "--target", "threshold", "-k", "0", c4});
  CHECK(no.code == kExitNo);
  CHECK(no.out == "NO\n");
}

TEST_CASE("solve writes a solution that verify accepts") {
  TempDir dir;
  const std::string g = dir.write("g.graph", kC4);
  const std::string s = dir.path("g.sol");
  for (const char* variant : {"edit", "complete", "delete"}) {
    const Run r = run({"solve", "--target", "threshold", "--variant", variant, "-k", "3", "-o", s, g});
    REQUIRE(r.code == kExitYes);
    CHECK(r.out.rfind("optimum ", 0) == 0);
    CHECK(run({"verify", "-k", "3", g, s}).out == "accepted\n");
    const Run oracle = run({"oracle", "--target", "threshold", "--variant", variant, "-k", "3", g});
    CHECK(oracle.out.substr(0, oracle.out.find('\n')) == r.out.substr(0, r.out.find('\n')));
  }
}

TEST_CASE("verify rejects") {
  TempDir dir;
  const std::string g = dir.write("p4.graph", kP4);
  const std::string empty = dir.write("empty.sol", "0 edit threshold optimal\n");
  const Run r = run({"verify", g, empty});
  CHECK(r.code == kExitNo);
  CHECK(r.out.rfind("rejected: ", 0) == 0);
  CHECK(r.out.find("obstruction P4") != std::string::npos);

  const std::string two = dir.write("two.sol", "2 edit threshold optimal\n+ 0 2\n+ 0 3\n");
  CHECK(run({"verify", "-k", "2", g, two}).code == kExitYes);
  CHECK(run({"verify", "-k", "1", g, two}).code == kExitNo);

  const std::string budgeted = dir.write("budget.graph", std::string("# k 1\n") + kP4);
  CHECK(run({"verify", budgeted, two}).code == kExitNo);

  const std::string bad_sign = dir.write("bad.sol", "1 edit threshold optimal\n+ 0 1\n");
  CHECK(run({"verify", g, bad_sign}).code == kExitUsage);
}

TEST_CASE("reduce sat2te") {
  TempDir dir;
  const std::string cnf = dir.write("x.cnf", "p cnf 1 1\n1 0\n");
  const Run r = run({"reduce", "sat2te", cnf});
  CHECK(r.code == kExitYes);
  CHECK(parse_budget_comment(r.out) == 2);

  const std::string out = dir.path("x.graph");
  const Run w = run({"reduce", "sat2te", cnf, "-o", out});
  CHECK(w.code == kExitYes);
  CHECK(w.out.rfind("k 2\n", 0) == 0);
  CHECK(fs::exists(out + ".layout"));
  const GadgetLayout layout = parse_layout(read_text_file(out + ".layout"));
  CHECK(layout.k == 2);
  CHECK(parse_graph(read_text_file(out)).order() == layout.isolated_first + layout.isolated_count);
}

TEST_CASE("reduce graph reductions") {
  TempDir dir;
  // A split graph: clique {0,1}, independent {2,3}.
  const std::string split = dir.write("split.graph", "4 3\n0 1\n0 2\n1 3\n");
  CHECK(run({"reduce", "ste2bce", "-k", "1", split}).code == kExitYes);
  const std::string two_k2 = dir.write("2k2.graph", "4 2\n0 1\n2 3\n");
  const Run bce = run({"reduce", "bce2ce", "-k", "1", two_k2});
  CHECK(bce.code == kExitYes);
  CHECK(parse_graph(bce.out).order() == 8);
  CHECK(run({"reduce", "bce2cce", "-k", "1", two_k2}).code == kExitYes);
  const std::string co = dir.write("co.graph", "4 4\n0 1\n2 3\n0 2\n1 3\n");
  CHECK(run({"reduce", "cce2chordal", "-k", "1", co}).code == kExitYes);

  const std::string triangle = dir.write("k3.graph", "3 3\n0 1\n1 2\n0 2\n");
  CHECK(run({"reduce", "bce2ce", "-k", "1", triangle}).code == kExitUsage);
  CHECK(run({"reduce", "ste2bce", "-k", "1", dir.write("c4.graph", kC4)}).code == kExitUsage);
  CHECK(run({"reduce", "nonsense", triangle}).code == kExitUsage);
}

TEST_CASE("usage and parse errors") {
  const Run unknown = run({"frobnicate"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("unknown subcommand") != std::string::npos);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"solve"}).code == kExitUsage);
  CHECK(run({"solve", "--target", "chordal", "x"}).code == kExitUsage);

  TempDir dir;
  const std::string loop = dir.write("loop.graph", "2 1\n0 0\n");
  const Run bad = run({"recognize", loop});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("line 2") != std::string::npos);
  CHECK(run({"recognize", dir.path("missing.graph")}).code == kExitUsage);
  CHECK(run({"solve", "-k", "-1", dir.write("p4.graph", kP4)}).code == kExitUsage);
  CHECK(run({"solve", dir.path("p4.graph")}).code == kExitUsage);  // no budget anywhere
}

TEST_CASE("recognize") {
  TempDir dir;
  const std::string p4 = dir.write("p4.graph", kP4);
  Run r = run({"recognize", "--target", "threshold", p4});
  CHECK(r.code == kExitNo);
  CHECK(r.out == "threshold no\nobstruction P4 0 1 2 3\n");
  r = run({"recognize", "--target", "split", p4});
  CHECK(r.code == kExitYes);
  CHECK(r.out.rfind("split yes\nC: ", 0) == 0);
  r = run({"recognize", "--target", "chain", p4});
  CHECK(r.code == kExitYes);
  CHECK(r.out.find("A: ") != std::string::npos);
  r = run({"recognize", "--target", "chordal", dir.write("c4.graph", kC4)});
  CHECK(r.code == kExitNo);
  CHECK(r.out.find("cycle ") != std::string::npos);
  r = run({"recognize", dir.write("star.graph", "3 2\n0 1\n0 2\n")});
  CHECK(r.code == kExitYes);
  CHECK(r.out.rfind("threshold yes\nlevel 0 C: ", 0) == 0);
}

TEST_CASE("kernelize") {
  TempDir dir;
  std::string star = "7 6\n";
  for (int v = 1; v < 7; ++v) star += "0 " + std::to_string(v) + "\n";
  const std::string g = dir.write("star.graph", star);
  const Run r = run({"kernelize", "-k", "1", g});
  CHECK(r.code == kExitYes);
  const Graph h = parse_graph(r.out);
  CHECK(h.order() < 7);
  CHECK(parse_budget_comment(r.out) == 1);
  CHECK(r.out.find("# original ") != std::string::npos);

  const std::string out = dir.path("kernel.graph");
  const Run w = run({"kernelize", "-k", "1", "-o", out, g});
  CHECK(w.out.rfind("reduced\nk 1\nvertices ", 0) == 0);
  CHECK(read_text_file(out) == r.out);

  const Run no = run({"kernelize", "-k", "0", dir.write("p4.graph", kP4)});
  CHECK(no.code == kExitNo);
}

TEST_CASE("gen and determinism") {
  const Run a = run({"gen", "--seed", "7", "--n", "15", "--r", "3", "--target", "chain"});
  const Run b = run({"gen", "--seed", "7", "--n", "15", "--r", "3", "--target", "chain"});
  CHECK(a.code == kExitYes);
  CHECK(a.out == b.out);
  CHECK(parse_graph(a.out).order() == 15);
  CHECK(parse_budget_comment(a.out) == 3);

  TempDir dir;
  const std::string g = dir.write("g.graph", a.out);
  const Run s1 = run({"solve", "--target", "chain", g});
  const Run s2 = run({"solve", "--target", "chain", g});
  CHECK(s1.code == kExitYes);
  CHECK(s1.out == s2.out);
}

TEST_CASE("time limit") {
  TempDir dir;
  const Run gen = run({"gen", "--seed", "3", "--n", "60", "--r", "40"});
  const std::string g = dir.write("big.graph", gen.out);
  const Run r = run({"solve", "--no-kernel", "--time-limit", "0.000001", g});
  CHECK(r.code == kExitTimeout);
  CHECK(r.out.rfind("TIMEOUT\nkernel_vertices ", 0) == 0);
  CHECK(r.out.find("partitions_tried ") != std::string::npos);
}

TEST_CASE("bench") {
  const Run r = run({"bench", "--n", "12", "--r", "1,2", "--seeds", "2", "--threads", "2"});
  CHECK(r.code == kExitYes);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  CHECK(line.rfind("index", 0) == 0);
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(line.find("ok") != std::string::npos);
  }
  CHECK(rows == 4);
}

TEST_CASE("executable exit codes") {
  const char* bin = std::getenv("TCEDIT_BIN");
  if (!bin) return;
  TempDir dir;
  const std::string p4 = dir.write("p4.graph", kP4);
  const std::string quiet = " > " + dir.path("out.txt") + " 2>&1";
  auto status = [&](const std::string& args) {
    const int raw = std::system((std::string(bin) + " " + args + quiet).c_str());
    return WEXITSTATUS(raw);
  };
  CHECK(status("solve -k 1 " + p4) == kExitYes);
  CHECK(status("solve -k 0 " + p4) == kExitNo);
  CHECK(status("bogus") == kExitUsage);
  CHECK(status("--help") == kExitYes);
}
