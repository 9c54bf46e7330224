// End-to-end tests of the command-line binary: every subcommand, every exit
// code reachable from the outside, the report documents on standard output,
// the one-line summaries on standard error, and verify round-trips.

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "wellcover/report.hpp"

#include "test_util.hpp"

using namespace wellcover;
using testutil::fixture_path;
using testutil::read_file;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "wellcover-cli-tests";
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path write_scratch(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

// Runs the binary through the shell, capturing both streams. `env_prefix`
// may hold VAR=value assignments that apply to this invocation only.
CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  ++counter;
  const auto out_path = scratch_dir() / ("stdout-" + std::to_string(counter) + ".txt");
  const auto err_path = scratch_dir() / ("stderr-" + std::to_string(counter) + ".txt");
  std::string cmd;
  if (!env_prefix.empty()) cmd += env_prefix + " ";
  cmd += std::string(WELLCOVER_CLI_PATH) + " " + args;
  cmd += " >'" + out_path.string() + "' 2>'" + err_path.string() + "'";
  const int status = std::system(cmd.c_str());
  CliResult result;
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  result.out = read_file(out_path.string());
  result.err = read_file(err_path.string());
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

// ---------------------------------------------------------------------------
// check

TEST_CASE("cli check reports a uniformly well covered graph") {
  const CliResult r = run_cli("check " + fixture_path("gC.edges"));
  REQUIRE(r.exit_code == 0);
  const ReportDocument d = ReportDocument::parse(r.out);
  REQUIRE(d.require("command") == "check");
  REQUIRE(d.require("graph-name") == "gC");
  REQUIRE(d.require("graph-format") == "edge-list");
  REQUIRE(d.require("graph-n") == "6");
  REQUIRE(d.require("graph6") == "EjmG");
  REQUIRE(d.require("independence-number") == "2");
  REQUIRE(d.require("well-covered") == "true");
  REQUIRE(d.require("uniformly-well-covered") == "true");
  REQUIRE(d.require("partition") == "{1,5,6} | {2,3,4}");
  REQUIRE(r.err ==
          "gC: well covered (every maximal independent set has size 2); "
          "uniformly well covered with partition {1,5,6} | {2,3,4}\n");
}

TEST_CASE("cli check explains each failure mode") {
  // Not well covered: the report carries two maximal independent sets of
  // different sizes.
  const CliResult c6 = run_cli("check " + fixture_path("c6.edges"));
  REQUIRE(c6.exit_code == 0);
  const ReportDocument d6 = ReportDocument::parse(c6.out);
  REQUIRE(d6.require("well-covered") == "false");
  const VertexSet small = parse_vertex_set_render(d6.require("witness-small"));
  const VertexSet large = parse_vertex_set_render(d6.require("witness-large"));
  REQUIRE(small.count() < large.count());
  REQUIRE(contains(c6.err, "not well covered"));

  // Well covered but with no disjoint maximal-clique cover.
  const CliResult c5 = run_cli("check " + fixture_path("c5.edges"));
  REQUIRE(c5.exit_code == 0);
  const ReportDocument d5 = ReportDocument::parse(c5.out);
  REQUIRE(d5.require("well-covered") == "true");
  REQUIRE(d5.require("uniformly-well-covered") == "false");
  REQUIRE(d5.require("not-uniform-reason") == "no-cover");
  REQUIRE(contains(c5.err, "no disjoint maximal-clique cover"));

  // Well covered with a cover criterion failure is reported with the
  // dominated part and the dominating independent set.
  const CliResult gb = run_cli("check " + fixture_path("gB.edges"));
  REQUIRE(gb.exit_code == 0);
  const ReportDocument db = ReportDocument::parse(gb.out);
  REQUIRE(db.require("uniformly-well-covered") == "false");
}

// ---------------------------------------------------------------------------
// certify

TEST_CASE("cli certify compares all three routes and agrees") {
  const CliResult pos = run_cli("certify " + fixture_path("gC.edges"));
  REQUIRE(pos.exit_code == 0);
  const ReportDocument dp = ReportDocument::parse(pos.out);
  REQUIRE(dp.require("route") == "all");
  REQUIRE(dp.require("covers-found") == "1");
  REQUIRE(dp.require("uniform-oracle") == "true");
  REQUIRE(dp.require("uniform-cover-criterion") == "true");
  REQUIRE(dp.require("uniform-quotient-ring") == "true");
  REQUIRE(dp.require("cover-1-domination-free") == "true");
  REQUIRE(dp.require("cover-1-all-regular") == "true");
  REQUIRE(dp.require("routes-agree") == "true");
  REQUIRE(contains(pos.err, "routes agree; uniformly well covered = true"));

  const CliResult neg = run_cli("certify " + fixture_path("c6.edges"));
  REQUIRE(neg.exit_code == 0);
  const ReportDocument dn = ReportDocument::parse(neg.out);
  REQUIRE(dn.require("covers-found") == "2");
  REQUIRE(dn.require("uniform-oracle") == "false");
  REQUIRE(dn.require("uniform-cover-criterion") == "false");
  REQUIRE(dn.require("uniform-quotient-ring") == "false");
  REQUIRE(dn.require("cover-2-domination-free") == "false");
  REQUIRE(dn.require("cover-2-all-regular") == "false");
  REQUIRE(dn.require("routes-agree") == "true");
  REQUIRE(contains(neg.err, "uniformly well covered = false"));
}

TEST_CASE("cli certify runs single routes on request") {
  const CliResult oracle = run_cli("certify --route oracle " + fixture_path("c5.edges"));
  REQUIRE(oracle.exit_code == 0);
  const ReportDocument d = ReportDocument::parse(oracle.out);
  REQUIRE(d.require("uniform-oracle") == "false");
  REQUIRE(d.get("uniform-cover-criterion") == std::nullopt);
  REQUIRE(d.get("uniform-quotient-ring") == std::nullopt);
  REQUIRE(d.require("routes-agree") == "true");

  const CliResult algebraic = run_cli("certify --route algebraic " + fixture_path("gC.edges"));
  REQUIRE(algebraic.exit_code == 0);
  REQUIRE(ReportDocument::parse(algebraic.out).require("uniform-quotient-ring") == "true");
}

// ---------------------------------------------------------------------------
// algebra

TEST_CASE("cli algebra prints part sums and zero-divisor witnesses") {
  const CliResult free_cover =
      run_cli("algebra --cover '1,5,6;2,3,4' " + fixture_path("gC.edges"));
  REQUIRE(free_cover.exit_code == 0);
  const ReportDocument df = ReportDocument::parse(free_cover.out);
  REQUIRE(df.require("cover") == "{1,5,6} | {2,3,4}");
  REQUIRE(df.require("well-covered") == "true");
  REQUIRE(df.require("theta-1") == "x1+x5+x6");
  REQUIRE(df.require("theta-2") == "x2+x3+x4");
  REQUIRE(df.require("witness-1") == "none");
  REQUIRE(df.require("witness-2") == "none");
  REQUIRE(df.require("all-regular") == "true");
  REQUIRE(contains(free_cover.err, "every part sum is regular"));

  const CliResult dominated =
      run_cli("algebra --cover '1,2;3,4;5,6' " + fixture_path("c6.edges"));
  REQUIRE(dominated.exit_code == 0);
  const ReportDocument dd = ReportDocument::parse(dominated.out);
  REQUIRE(dd.require("well-covered") == "false");
  REQUIRE(dd.require("theta-1") == "x1+x2");
  REQUIRE(dd.require("witness-1") == "x3*x6");
  REQUIRE(dd.require("witness-2") == "x2*x5");
  REQUIRE(dd.require("witness-3") == "x1*x4");
  REQUIRE(dd.require("all-regular") == "false");
  REQUIRE(contains(dominated.err, "some part sum is a zero divisor"));
}

TEST_CASE("cli algebra rejects invalid covers") {
  const CliResult undersized =
      run_cli("algebra --cover '1,2;3,4' " + fixture_path("c6.edges"));
  REQUIRE(undersized.exit_code == 2);
  REQUIRE(undersized.out.empty());
  REQUIRE(contains(undersized.err, "error: "));

  const CliResult garbage = run_cli("algebra --cover 1,x " + fixture_path("c6.edges"));
  REQUIRE(garbage.exit_code == 2);
  REQUIRE(contains(garbage.err, "error: not an integer: 'x'"));
}

// ---------------------------------------------------------------------------
// bipartite

TEST_CASE("cli bipartite applies the matching criterion") {
  const CliResult p4 = run_cli("bipartite " + fixture_path("p4.edges"));
  REQUIRE(p4.exit_code == 0);
  const ReportDocument d4 = ReportDocument::parse(p4.out);
  REQUIRE(d4.require("applicable") == "true");
  REQUIRE(d4.require("perfect-matching") == "true");
  REQUIRE(d4.require("matching") == "1-2 3-4");
  REQUIRE(d4.require("well-covered") == "true");
  REQUIRE(contains(p4.err, "well covered; matching 1-2 3-4"));

  const CliResult p3 = run_cli("bipartite " + fixture_path("p3.edges"));
  REQUIRE(p3.exit_code == 0);
  const ReportDocument d3 = ReportDocument::parse(p3.out);
  REQUIRE(d3.require("perfect-matching") == "false");
  REQUIRE(d3.require("well-covered") == "false");
  REQUIRE(contains(p3.err, "no perfect matching"));

  const CliResult c6 = run_cli("bipartite " + fixture_path("c6.edges"));
  REQUIRE(c6.exit_code == 0);
  const ReportDocument d6 = ReportDocument::parse(c6.out);
  REQUIRE(d6.require("perfect-matching") == "true");
  REQUIRE(d6.require("well-covered") == "false");
  REQUIRE(d6.get("offending-edge").has_value());
  REQUIRE(d6.get("offending-pair").has_value());

  const CliResult c5 = run_cli("bipartite " + fixture_path("c5.edges"));
  REQUIRE(c5.exit_code == 0);
  const ReportDocument d5 = ReportDocument::parse(c5.out);
  REQUIRE(d5.require("applicable") == "false");
  REQUIRE(d5.require("inapplicable-reason") == "not bipartite");
  REQUIRE(contains(c5.err, "not bipartite"));
}

// ---------------------------------------------------------------------------
// conjecture

TEST_CASE("cli conjecture scans the exhaustive two-by-two family") {
  const CliResult r = run_cli("conjecture --n 4 --parts 2,2");
  REQUIRE(r.exit_code == 0);
  const ReportDocument d = ReportDocument::parse(r.out);
  REQUIRE(d.require("command") == "conjecture");
  REQUIRE(d.require("mode") == "exhaustive-labeled");
  REQUIRE(d.require("instances-examined") == "16");
  REQUIRE(d.require("instances-qualifying") == "7");
  REQUIRE(d.require("qualifying-partition-pairs") == "9");
  REQUIRE(d.require("timeouts") == "0");
  REQUIRE(d.require("counterexamples") == "0");
  REQUIRE(d.all("tally") ==
          std::vector<std::string>{"independent-partition 16 16", "maximal-cliques-size-s 16 7",
                                   "well-covered 7 7", "partite-matching-structure 7 7",
                                   "uniformly-well-covered 7 7"});
  REQUIRE(contains(r.err, "examined 16, qualifying 7, counterexamples 0, timeouts 0"));

  // --s is shorthand for equal part sizes; the resulting report is
  // identical apart from timing.
  const CliResult s = run_cli("conjecture --n 4 --s 2");
  REQUIRE(s.exit_code == 0);
  ReportDocument a = ReportDocument::parse(r.out);
  ReportDocument b = ReportDocument::parse(s.out);
  const auto strip_wall = [](ReportDocument& doc) {
    std::erase_if(doc.entries, [](const auto& e) { return e.first == "wall-ms"; });
  };
  strip_wall(a);
  strip_wall(b);
  REQUIRE(a.entries == b.entries);
}

TEST_CASE("cli conjecture validates its flag combinations") {
  const CliResult missing = run_cli("conjecture --n 4");
  REQUIRE(missing.exit_code == 2);
  REQUIRE(contains(missing.err, "error: conjecture scan needs --parts or --s"));

  const CliResult indivisible = run_cli("conjecture --n 5 --s 2");
  REQUIRE(indivisible.exit_code == 2);
  REQUIRE(contains(indivisible.err,
                   "error: --n must be divisible by --s when --parts is not given"));

  const CliResult mismatch = run_cli("conjecture --n 4 --s 3 --parts 2,2");
  REQUIRE(mismatch.exit_code == 2);
  REQUIRE(contains(mismatch.err, "error: --s disagrees with the number of entries in --parts"));

  // Generator-level validation surfaces through the same exit code.
  const CliResult badsum = run_cli("conjecture --n 6 --parts 2,2");
  REQUIRE(badsum.exit_code == 2);
}

// ---------------------------------------------------------------------------
// verify

TEST_CASE("cli verify round-trips every command's report") {
  const std::vector<std::string> commands = {
      "check " + fixture_path("gC.edges"),
      "check " + fixture_path("c6.edges"),
      "certify " + fixture_path("c6.edges"),
      "certify --route corollary3 " + fixture_path("gC.edges"),
      "algebra --cover '1,2;3,4;5,6' " + fixture_path("c6.edges"),
      "bipartite " + fixture_path("p4.edges"),
      "bipartite " + fixture_path("c5.edges"),
      "conjecture --n 4 --parts 2,2",
      "conjecture --mode random-spartite --n 6 --parts 2,2,2 --p 0.8 --seed 5 --count 10",
  };
  int index = 0;
  for (const std::string& command : commands) {
    INFO("command: " << command);
    const CliResult produced = run_cli(command);
    REQUIRE(produced.exit_code == 0);
    const auto report =
        write_scratch("verify-" + std::to_string(index++) + ".report", produced.out);
    const CliResult verified = run_cli("verify '" + report.string() + "'");
    REQUIRE(verified.exit_code == 0);
    REQUIRE(verified.err == "verified\n");
    REQUIRE(verified.out.empty());
  }
}

TEST_CASE("cli verify rejects tampered and malformed reports") {
  const CliResult produced = run_cli("check " + fixture_path("gC.edges"));
  REQUIRE(produced.exit_code == 0);

  std::string tampered = produced.out;
  const std::string honest = "uniformly-well-covered: true";
  const auto at = tampered.find(honest);
  REQUIRE(at != std::string::npos);
  tampered.replace(at, honest.size(), "uniformly-well-covered: false");
  const auto tampered_path = write_scratch("tampered.report", tampered);
  const CliResult mismatch = run_cli("verify '" + tampered_path.string() + "'");
  REQUIRE(mismatch.exit_code == 1);
  REQUIRE(contains(mismatch.err, "MISMATCH: "));

  const auto not_report = write_scratch("not-a-report.txt", "tool: wellcover\n");
  const CliResult malformed = run_cli("verify '" + not_report.string() + "'");
  REQUIRE(malformed.exit_code == 2);
  REQUIRE(contains(malformed.err, "error: not a wellcover report document"));

  const auto unknown = write_scratch("unknown-command.report",
                                     "format: wellcover-report/1\ncommand: frobnicate\n");
  const CliResult bad_command = run_cli("verify '" + unknown.string() + "'");
  REQUIRE(bad_command.exit_code == 2);
  REQUIRE(contains(bad_command.err, "error: unknown report command 'frobnicate'"));
}

// ---------------------------------------------------------------------------
// exit codes and the environment

TEST_CASE("cli reports malformed input through exit code two") {
  const CliResult absent = run_cli("check /nonexistent/graph.edges");
  REQUIRE(absent.exit_code == 2);
  REQUIRE(contains(absent.err, "error: cannot open file '/nonexistent/graph.edges'"));

  const auto bad = write_scratch("bad.edges", "1\n");
  const CliResult malformed = run_cli("check '" + bad.string() + "'");
  REQUIRE(malformed.exit_code == 2);
  REQUIRE(contains(malformed.err, "error: expected two tokens per line, got '1'"));
}

TEST_CASE("cli reports usage errors through exit code sixty-four") {
  REQUIRE(run_cli("").exit_code == 64);
  REQUIRE(run_cli("frobnicate").exit_code == 64);
  REQUIRE(run_cli("check").exit_code == 64);
  REQUIRE(run_cli("check --bogus-flag " + fixture_path("c4.edges")).exit_code == 64);
  REQUIRE(run_cli("check --format adjlist " + fixture_path("c4.edges")).exit_code == 64);
  REQUIRE(run_cli("conjecture --mode sideways --n 4 --s 2").exit_code == 64);
}

TEST_CASE("cli reports resource limits through exit code sixty-five") {
  // A graph6 document declaring 65 vertices exceeds the bitmask capacity.
  const auto too_big = write_scratch("too-big.g6", "~?@@\n");
  const CliResult r = run_cli("check --format graph6 '" + too_big.string() + "'");
  REQUIRE(r.exit_code == 65);
  REQUIRE(contains(r.err, "limit exceeded: "));
}

TEST_CASE("cli help exits cleanly") {
  REQUIRE(run_cli("--help").exit_code == 0);
  REQUIRE(run_cli("check --help").exit_code == 0);
  const CliResult help = run_cli("--help");
  REQUIRE(contains(help.out, "check"));
  REQUIRE(contains(help.out, "verify"));
}

TEST_CASE("cli honours the timeout environment variable") {
  const CliResult ok =
      run_cli("check " + fixture_path("gC.edges"), "WELLCOVER_TIMEOUT_SECS=100");
  REQUIRE(ok.exit_code == 0);
  REQUIRE(ReportDocument::parse(ok.out).require("uniformly-well-covered") == "true");

  for (const char* bad : {"abc", "0", "-3", "2x"}) {
    const CliResult r = run_cli("check " + fixture_path("gC.edges"),
                                std::string("WELLCOVER_TIMEOUT_SECS=") + bad);
    INFO("value: " << bad);
    REQUIRE(r.exit_code == 2);
    REQUIRE(contains(r.err, "error: WELLCOVER_TIMEOUT_SECS must be a positive integer"));
  }
}

// The ROUTES DISAGREE exit path (code three) is a tripwire for internal
// inconsistency between the three recognition routes. The routes are proved
// equivalent, so no input graph can reach it; the sweeps in the recognition
// and scanning suites pin the agreement instead.
TEST_CASE("cli certify agrees across the whole fixture corpus") {
  for (const char* name : {"c4", "c5", "c6", "gA", "gB", "gC", "gD", "p3", "p4"}) {
    const CliResult r = run_cli("certify " + fixture_path(std::string(name) + ".edges"));
    INFO("fixture: " << name);
    REQUIRE(r.exit_code == 0);
    REQUIRE(ReportDocument::parse(r.out).require("routes-agree") == "true");
  }
}
