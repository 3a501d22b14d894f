// middlemen: command-line front end for the critical-node analyses.
//
// Exit codes: 0 success, 2 usage or input error, 3 resource/guard error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "middlemen/centrality.hpp"
#include "middlemen/contestability.hpp"
#include "middlemen/fixtures.hpp"
#include "middlemen/graph.hpp"
#include "middlemen/middleman.hpp"
#include "middlemen/report.hpp"

namespace {

using namespace middlemen;
using nlohmann::json;

constexpr int kUsageError = 2;
constexpr int kGuardError = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string fixture;
  std::string format = "edgelist";
  bool undirected = false;
  bool json = false;
  std::vector<std::string> positionals;

  void attach(CLI::App* cmd, const std::string& positional_help) {
    cmd->add_option("--fixture", fixture, "Use an embedded fixture instead of a file");
    cmd->add_option("--format", format, "Input format")
        ->check(CLI::IsMember({"edgelist", "matrix"}));
    cmd->add_flag("--undirected", undirected, "Reciprocate every arc before analysis");
    cmd->add_flag("--json", json, "Emit JSON");
    cmd->add_option("args", positionals, positional_help);
  }

  /// Splits positionals into the input path (absent with --fixture) and the
  /// `expected` trailing arguments.
  std::vector<std::string> trailing(std::size_t expected, const char* what) const {
    const std::size_t want = expected + (fixture.empty() ? 1 : 0);
    if (positionals.size() != want)
      throw UsageError(std::string("expected ") + (fixture.empty() ? "<input> " : "") + what);
    return {positionals.end() - static_cast<std::ptrdiff_t>(expected), positionals.end()};
  }

  DirectedGraph load() const {
    DirectedGraph g;
    if (!fixture.empty()) {
      auto found = middlemen::fixture(fixture);
      if (!found) throw UsageError("unknown fixture '" + fixture + "' (see 'middlemen fixtures')");
      g = std::move(*found);
    } else {
      if (positionals.empty()) throw UsageError("no input file given");
      const auto& path = positionals.front();
      std::ifstream in(path);
      if (!in) throw UsageError("cannot read '" + path + "'");
      g = format == "matrix" ? parse_adjacency_matrix(in) : parse_edge_list(in);
    }
    return undirected ? underlying_undirected(g) : g;
  }
};

std::string set_text(const DirectedGraph& g, const std::vector<NodeId>& ids) {
  std::string out = "{";
  for (std::size_t k = 0; k < ids.size(); ++k) out += (k ? "," : "") + g.label(ids[k]);
  return out + "}";
}

int run_analyze(const InputOptions& input, AnalysisOptions options) {
  input.trailing(0, "");
  const auto g = input.load();
  options.undirected = input.undirected;
  const auto report = analyze(g, options);
  if (input.json) std::cout << to_json(report).dump(2) << "\n";
  else std::cout << render_table(report);
  return 0;
}

int run_contest(const InputOptions& input, bool minimal) {
  const auto args = input.trailing(1, "<node>");
  const auto g = input.load();
  const NodeId node = g.id(args[0]);
  const auto status = contest_status(g, node);
  const auto cls = classify(g, node);

  std::vector<NodeId> direct;
  for (NodeId j = 0; j < g.size(); ++j)
    if (j != node && directly_contests(g, j, node)) direct.push_back(j);
  std::optional<std::vector<std::vector<NodeId>>> sets;
  if (minimal) sets = minimal_contesting_sets(g, node);

  if (input.json) {
    json out = {{"node", g.label(node)},
                {"status", std::string(to_string(status))},
                {"middleman_class", std::string(to_string(cls))}};
    out["contested"] = status == ContestStatus::Vacuous ? json("vacuous")
                                                        : json(status == ContestStatus::Contested);
    json direct_labels = json::array();
    for (NodeId j : direct) direct_labels.push_back(g.label(j));
    out["directly_contested_by"] = std::move(direct_labels);
    if (sets) {
      json all = json::array();
      for (const auto& set : *sets) {
        json labels = json::array();
        for (NodeId id : set) labels.push_back(g.label(id));
        all.push_back(std::move(labels));
      }
      out["min_contesting_sets"] = std::move(all);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::cout << g.label(node) << ": ";
  switch (status) {
    case ContestStatus::Vacuous: std::cout << "contested (vacuous: empty coverage)"; break;
    case ContestStatus::Contested: std::cout << "contested"; break;
    case ContestStatus::Uncontested:
      std::cout << "uncontested (" << to_string(cls) << " middleman)";
      break;
  }
  if (sets && status != ContestStatus::Uncontested) {
    std::cout << "; minimal:";
    for (const auto& set : *sets) std::cout << " " << set_text(g, set);
  }
  std::cout << "\n";
  if (!direct.empty()) std::cout << "directly contested by: " << set_text(g, direct) << "\n";
  return 0;
}

int run_centrality(const InputOptions& input, bool raw, double beta, double damping) {
  const auto args = input.trailing(1, "<measure>");
  const std::string& measure = args[0];
  static const std::vector<std::string> known = {"degree",  "closeness", "betweenness",
                                                 "bonacich", "pagerank", "beta"};
  if (std::find(known.begin(), known.end(), measure) == known.end())
    throw UsageError("unknown measure '" + measure +
                     "' (degree, closeness, betweenness, bonacich, pagerank, beta)");
  const auto g = input.load();

  if (measure == "degree") {
    const auto d = degree_centrality(g);
    if (input.json) {
      json rows = json::array();
      for (NodeId v = 0; v < g.size(); ++v)
        rows.push_back({{"label", g.label(v)},
                        {"in", d.in.scores[v]},
                        {"out", d.out.scores[v]},
                        {"total", d.total.scores[v]}});
      std::cout << json{{"measure", "degree"}, {"normalization", d.total.normalization},
                        {"parameters", json::object()}, {"scores", rows}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "measure=degree (in out total)\n";
      for (NodeId v = 0; v < g.size(); ++v)
        std::cout << g.label(v) << "  " << d.in.scores[v] << "  " << d.out.scores[v] << "  "
                  << d.total.scores[v] << "\n";
    }
    return 0;
  }

  CentralityVector result;
  if (measure == "closeness") result = closeness(g);
  else if (measure == "betweenness") result = betweenness(g, !raw);
  else if (measure == "bonacich") result = bonacich(g, beta);
  else if (measure == "pagerank") result = pagerank(g, damping);
  else result = beta_measure(g);

  if (input.json) {
    json rows = json::array();
    for (NodeId v = 0; v < g.size(); ++v)
      rows.push_back({{"label", g.label(v)}, {"score", result.scores[v]}});
    json params = json::object();
    for (const auto& [key, value] : result.parameters) params[key] = value;
    std::cout << json{{"measure", result.measure}, {"normalization", result.normalization},
                      {"parameters", params}, {"scores", rows}}
                     .dump(2)
              << "\n";
    return 0;
  }
  std::cout << "measure=" << result.measure << " normalization=" << result.normalization;
  for (const auto& [key, value] : result.parameters) std::cout << " " << key << "=" << value;
  std::cout << "\n";
  for (NodeId v = 0; v < g.size(); ++v)
    std::cout << g.label(v) << "  " << format_fixed(result.scores[v]) << "\n";
  return 0;
}

int run_fixtures(bool as_json) {
  if (as_json) {
    json all = json::array();
    for (const auto& f : fixtures())
      all.push_back({{"name", f.name},
                     {"n", f.graph.size()},
                     {"arcs", f.graph.arc_count()},
                     {"description", f.description}});
    std::cout << all.dump(2) << "\n";
    return 0;
  }
  for (const auto& f : fixtures())
    std::cout << f.name << "  n=" << f.graph.size() << " arcs=" << f.graph.arc_count() << "  "
              << f.description << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical nodes (middlemen), contestability and brokerage power in directed networks"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  AnalysisOptions analysis;
  InputOptions analyze_in;
  auto* analyze_cmd = app.add_subcommand("analyze", "Per-node report of every measure");
  analyze_in.attach(analyze_cmd, "<input>");
  analyze_cmd->add_flag("--raw", analysis.raw_betweenness, "Unnormalized betweenness");
  analyze_cmd->add_option("--beta", analysis.beta, "Bonacich beta")->capture_default_str();
  analyze_cmd->add_option("--damping", analysis.damping, "PageRank damping")->capture_default_str();
  analyze_cmd->add_flag("--minimal", analysis.minimal_sets, "Include minimal contesting sets");

  InputOptions contest_in;
  bool minimal = false;
  auto* contest_cmd = app.add_subcommand("contest", "Contestability verdict for one node");
  contest_in.attach(contest_cmd, "[<input>] <node>");
  contest_cmd->add_flag("--minimal", minimal, "List the minimal contesting sets");

  InputOptions centrality_in;
  bool raw = false;
  double beta = kDefaultBonacichBeta;
  double damping = kDefaultDamping;
  auto* centrality_cmd = app.add_subcommand("centrality", "One comparison centrality measure");
  centrality_in.attach(centrality_cmd, "[<input>] <measure>");
  centrality_cmd->add_flag("--raw", raw, "Unnormalized betweenness");
  centrality_cmd->add_option("--beta", beta, "Bonacich beta")->capture_default_str();
  centrality_cmd->add_option("--damping", damping, "PageRank damping")->capture_default_str();

  InputOptions dot_in;
  auto* dot_cmd = app.add_subcommand("export-dot", "Graphviz rendering with middleman classes");
  dot_in.attach(dot_cmd, "<input>");

  bool fixtures_json = false;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List the embedded example networks");
  fixtures_cmd->add_flag("--json", fixtures_json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_in, analysis);
    if (*contest_cmd) return run_contest(contest_in, minimal);
    if (*centrality_cmd) return run_centrality(centrality_in, raw, beta, damping);
    if (*dot_cmd) {
      dot_in.trailing(0, "");
      std::cout << render_dot(dot_in.load());
      return 0;
    }
    if (*fixtures_cmd) return run_fixtures(fixtures_json);
  } catch (const SpectralBoundError& e) {
    std::cerr << "error: " << e.what() << " (bound " << e.bound() << ")\n";
    return kGuardError;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardError;
  } catch (const NumericError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kGuardError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}
