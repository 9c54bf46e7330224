// Command-line front end: parses a graph (or generator configuration), runs
// the requested analysis, prints a machine-readable report document on
// standard output and a one-line human summary on standard error.
//
// Exit codes: 0 verdict computed; 1 verification mismatch; 2 malformed
// input; 3 certification routes disagree; 64 command-line usage error;
// 65 resource limit exceeded; 70 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wellcover/wellcover.hpp"

namespace {

using namespace wellcover;

std::optional<int> timeout_secs_from_env() {
  const char* raw = std::getenv("WELLCOVER_TIMEOUT_SECS");
  if (raw == nullptr) return std::nullopt;
  try {
    std::size_t pos = 0;
    const int secs = std::stoi(raw, &pos);
    if (pos != std::string(raw).size() || secs < 1) throw std::invalid_argument(raw);
    return secs;
  } catch (const std::exception&) {
    throw ParseError("WELLCOVER_TIMEOUT_SECS must be a positive integer");
  }
}

SearchBudget command_budget() {
  SearchBudget budget;
  if (const auto secs = timeout_secs_from_env())
    budget.max_nodes = kBudgetNodesPerSecond * static_cast<std::uint64_t>(*secs);
  return budget;
}

void emit(const ReportDocument& doc, const std::string& summary) {
  std::cout << doc.render();
  std::cerr << summary << '\n';
}

std::string check_summary(const ReportDocument& d) {
  std::string out = d.require("graph-name") + ": ";
  if (d.require("well-covered") == "true") {
    out += "well covered (every maximal independent set has size " +
           d.require("independence-number") + "); ";
    if (d.require("uniformly-well-covered") == "true")
      out += "uniformly well covered with partition " + d.require("partition");
    else if (d.require("not-uniform-reason") == "no-cover")
      out += "not uniformly well covered (no disjoint maximal-clique cover)";
    else
      out += "not uniformly well covered (part " + d.require("dominated-part") +
             " of cover " + d.require("examined-cover") + " is dominated by " +
             d.require("dominating-set") + ")";
  } else {
    out += "not well covered (maximal independent sets " + d.require("witness-small") +
           " and " + d.require("witness-large") + " have different sizes)";
  }
  return out;
}

std::string certify_summary(const ReportDocument& d) {
  std::string out = d.require("graph-name") + ": ";
  if (d.require("routes-agree") == "true") {
    std::string verdict = "undetermined";
    for (const char* key : {"uniform-oracle", "uniform-cover-criterion", "uniform-quotient-ring"})
      if (auto v = d.get(key)) verdict = *v;
    out += "routes agree; uniformly well covered = " + verdict + " (" +
           d.require("covers-found") + " cover(s) at independence number " +
           d.require("independence-number") + ")";
  } else {
    out += "ROUTES DISAGREE: " + d.require("disagreement");
  }
  return out;
}

std::string algebra_summary(const ReportDocument& d) {
  std::string out = d.require("graph-name") + ": cover " + d.require("cover") + "; ";
  out += d.require("all-regular") == "true"
             ? "every part sum is regular in the quotient by the edge ideal"
             : "some part sum is a zero divisor in the quotient by the edge ideal";
  return out;
}

std::string bipartite_summary(const ReportDocument& d) {
  std::string out = d.require("graph-name") + ": ";
  if (d.require("applicable") == "false") return out + d.require("inapplicable-reason");
  if (d.require("well-covered") == "true")
    return out + "well covered; matching " + d.require("matching");
  if (d.require("perfect-matching") == "false") return out + "not well covered (no perfect matching)";
  return out + "not well covered (matched edge " + d.require("offending-edge") +
         ", non-adjacent pair " + d.require("offending-pair") + ")";
}

std::string scan_summary(const ReportDocument& d) {
  return "examined " + d.require("instances-examined") + ", qualifying " +
         d.require("instances-qualifying") + ", counterexamples " +
         d.require("counterexamples") + ", timeouts " + d.require("timeouts");
}

int run(int argc, char** argv) {
  CLI::App app{"well-covered graph recognition, certification, and scanning"};
  app.require_subcommand(1);

  std::string path, format = "edge-list", route = "all", cover_flag, mode = "exhaustive-labeled";
  std::string parts_flag;
  int n_flag = 0, s_flag = 0, timeout_flag = 0;
  double probability = 0.5;
  std::uint64_t seed = 0, count = 0;

  const std::vector<std::string> formats = {"edge-list", "graph6", "dimacs"};

  CLI::App* check = app.add_subcommand("check", "well-coveredness of one graph");
  check->add_option("file", path, "graph file")->required();
  check->add_option("--format", format, "input format")->check(CLI::IsMember(formats));

  CLI::App* certify = app.add_subcommand("certify", "compare independent recognition routes");
  certify->add_option("file", path, "graph file")->required();
  certify->add_option("--format", format, "input format")->check(CLI::IsMember(formats));
  certify->add_option("--route", route, "route(s) to evaluate")
      ->check(CLI::IsMember({"oracle", "corollary3", "algebraic", "all"}));

  CLI::App* algebra = app.add_subcommand("algebra", "part sums and zero-divisor witnesses");
  algebra->add_option("file", path, "graph file")->required();
  algebra->add_option("--format", format, "input format")->check(CLI::IsMember(formats));
  algebra->add_option("--cover", cover_flag, "clique cover, e.g. \"1,5,6;2,3,4\"")->required();

  CLI::App* bipartite = app.add_subcommand("bipartite", "matching-based bipartite criterion");
  bipartite->add_option("file", path, "graph file")->required();
  bipartite->add_option("--format", format, "input format")->check(CLI::IsMember(formats));

  CLI::App* conjecture = app.add_subcommand(
      "conjecture", "scan partitioned graphs for non-uniform well-covered examples");
  conjecture->add_option("--mode", mode, "instance generator")
      ->check(CLI::IsMember({"exhaustive-labeled", "random-spartite", "random-gnp"}));
  conjecture->add_option("--n", n_flag, "vertex count")->required();
  conjecture->add_option("--s", s_flag, "number of equal parts");
  conjecture->add_option("--parts", parts_flag, "comma-separated part sizes, e.g. 2,2,2");
  conjecture->add_option("--p", probability, "edge probability for random modes");
  conjecture->add_option("--seed", seed, "random seed");
  conjecture->add_option("--count", count, "instance count (0 = all, exhaustive mode only)");
  conjecture->add_option("--timeout-secs", timeout_flag, "per-instance work allowance");

  CLI::App* verify = app.add_subcommand("verify", "re-check a report document");
  verify->add_option("file", path, "report file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 64;
  }

  if (check->parsed()) {
    SearchBudget budget = command_budget();
    const ReportDocument d = make_check_report(load_graph_file(path, format), &budget);
    emit(d, check_summary(d));
    return 0;
  }
  if (certify->parsed()) {
    SearchBudget budget = command_budget();
    const ReportDocument d = make_certify_report(load_graph_file(path, format), route, &budget);
    emit(d, certify_summary(d));
    return d.require("routes-agree") == "true" ? 0 : 3;
  }
  if (algebra->parsed()) {
    SearchBudget budget = command_budget();
    const ReportDocument d =
        make_algebra_report(load_graph_file(path, format), parse_cover_flag(cover_flag), &budget);
    emit(d, algebra_summary(d));
    return 0;
  }
  if (bipartite->parsed()) {
    const ReportDocument d = make_bipartite_report(load_graph_file(path, format));
    emit(d, bipartite_summary(d));
    return 0;
  }
  if (conjecture->parsed()) {
    GeneratorConfig config;
    config.mode = wellcover::detail::parse_mode(mode);
    config.n = n_flag;
    config.edge_probability = probability;
    config.seed = seed;
    config.count = count;
    if (!parts_flag.empty()) {
      config.part_sizes = wellcover::detail::parse_part_sizes(parts_flag);
      if (s_flag > 0 && s_flag != static_cast<int>(config.part_sizes.size()))
        throw ParseError("--s disagrees with the number of entries in --parts");
    } else if (s_flag > 0) {
      if (n_flag % s_flag != 0)
        throw ParseError("--n must be divisible by --s when --parts is not given");
      config.part_sizes.assign(static_cast<std::size_t>(s_flag), n_flag / s_flag);
    } else {
      throw ParseError("conjecture scan needs --parts or --s");
    }
    if (const auto secs = timeout_secs_from_env()) config.timeout_secs = *secs;
    if (timeout_flag > 0) config.timeout_secs = timeout_flag;
    const ReportDocument d = make_scan_report(conjecture_scan(config));
    emit(d, scan_summary(d));
    return 0;
  }
  // verify
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const VerifyResult result = verify_report(buffer.str());
  std::cerr << (result.ok ? "verified" : "MISMATCH: " + result.message) << '\n';
  return result.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const int code = run(argc, argv);
    if (code == 0 || code == 3 || code == 1) std::cout.flush();
    return code;
  } catch (const wellcover::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const wellcover::LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << '\n';
    return 65;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
