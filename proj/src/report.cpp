#include "middlemen/report.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "middlemen/centrality.hpp"

namespace middlemen {

AnalysisReport analyze(const DirectedGraph& g, const AnalysisOptions& options) {
  AnalysisReport report;
  report.options = options;
  report.n = g.size();
  report.arcs = g.arc_count();
  report.components = weakly_connected_components(g).size();
  report.weakly_connected = report.components <= 1;
  report.strongly_connected = is_strongly_connected(g);
  report.potential = potential_brokerage(g);

  const auto b = brokerage(g);
  const auto classes = classify(g);
  const auto between = betweenness(g, !options.raw_betweenness);
  const auto close = closeness(g);
  const auto bon = bonacich(g, options.beta);
  const auto rank = pagerank(g, options.damping);
  const auto dominance = beta_measure(g);
  const auto normalizer = static_cast<std::int64_t>(report.potential.normalizer);

  report.nodes.reserve(g.size());
  for (NodeId v = 0; v < g.size(); ++v) {
    NodeReport row;
    row.id = v;
    row.label = g.label(v);
    row.role = node_role(g, v);
    row.middleman_class = classes[v];
    row.brokerage = b[v];
    row.nu = Rational(static_cast<std::int64_t>(b[v]), normalizer);
    row.nu_star = b[v] > 0 ? distance_based_power(g, v) : 0.0;
    row.contested = contest_status(g, v);
    row.degree_in = g.in_degree(v);
    row.degree_out = g.out_degree(v);
    row.closeness = close.scores[v];
    row.betweenness = between.scores[v];
    row.bonacich = bon.scores[v];
    row.pagerank = rank.scores[v];
    row.beta_measure = dominance.scores[v];
    if (options.minimal_sets) row.min_contesting_sets = minimal_contesting_sets(g, v);
    report.nodes.push_back(std::move(row));
  }
  return report;
}

std::vector<std::size_t> ranking(const AnalysisReport& report) {
  std::vector<std::size_t> order(report.nodes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& a = report.nodes[x];
    const auto& b = report.nodes[y];
    if (a.nu != b.nu) return a.nu > b.nu;
    return a.brokerage > b.brokerage;
  });
  return order;
}

nlohmann::json to_json(const AnalysisReport& report) {
  using nlohmann::json;
  json nodes = json::array();
  for (const auto& row : report.nodes) {
    json entry = {
        {"label", row.label},
        {"role", std::string(to_string(row.role))},
        {"middleman_class", std::string(to_string(row.middleman_class))},
        {"brokerage", row.brokerage},
        {"nu", row.nu.to_double()},
        {"nu_star", row.nu_star},
        {"degree_in", row.degree_in},
        {"degree_out", row.degree_out},
        {"closeness", row.closeness},
        {"betweenness", row.betweenness},
        {"bonacich", row.bonacich},
        {"pagerank", row.pagerank},
        {"beta_measure", row.beta_measure},
    };
    switch (row.contested) {
      case ContestStatus::Contested: entry["contested"] = true; break;
      case ContestStatus::Uncontested: entry["contested"] = false; break;
      case ContestStatus::Vacuous: entry["contested"] = "vacuous"; break;
    }
    if (row.min_contesting_sets) {
      json sets = json::array();
      for (const auto& set : *row.min_contesting_sets) {
        json labels = json::array();
        for (NodeId id : set) labels.push_back(report.nodes[id].label);
        sets.push_back(std::move(labels));
      }
      entry["min_contesting_sets"] = std::move(sets);
    }
    nodes.push_back(std::move(entry));
  }

  const auto& opt = report.options;
  return json{
      {"graph",
       {{"n", report.n},
        {"arcs", report.arcs},
        {"weakly_connected", report.weakly_connected},
        {"strongly_connected", report.strongly_connected},
        {"components", report.components},
        {"B_prime", report.potential.raw},
        {"B", report.potential.normalizer}}},
      {"nodes", std::move(nodes)},
      {"parameters",
       {{"beta", opt.beta},
        {"damping", opt.damping},
        {"undirected", opt.undirected},
        {"betweenness_normalization", opt.raw_betweenness ? "raw" : "normalized"},
        {"bonacich_normalization", "sum of squares = n"},
        {"closeness", "reachable-weighted"},
        {"pagerank_normalization", "sum = 1"}}},
      {"version", report.version},
  };
}

std::string format_fixed(double value, int decimals) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(decimals) << (value == 0.0 ? 0.0 : value);
  return out.str();
}

namespace {

std::string marked_label(const NodeReport& row) {
  switch (row.middleman_class) {
    case MiddlemanClass::StrongMiddleman: return row.label + "(**)";
    case MiddlemanClass::WeakMiddleman: return row.label + "(*)";
    case MiddlemanClass::NonMiddleman: break;
  }
  return row.label;
}

}  // namespace

std::string render_table(const AnalysisReport& report) {
  const std::vector<std::string> header = {"Node", "d-(d+)", "E", "BC", "nu", "nu*"};
  std::vector<std::vector<std::string>> rows;
  for (auto index : ranking(report)) {
    const auto& row = report.nodes[index];
    rows.push_back({marked_label(row),
                    std::to_string(row.degree_in) + " (" + std::to_string(row.degree_out) + ")",
                    format_fixed(row.bonacich), format_fixed(row.betweenness),
                    format_fixed(row.nu.to_double()), format_fixed(row.nu_star)});
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }

  std::ostringstream out;
  out << "n=" << report.n << " arcs=" << report.arcs << " components=" << report.components
      << " weakly_connected=" << (report.weakly_connected ? "yes" : "no")
      << " strongly_connected=" << (report.strongly_connected ? "yes" : "no")
      << " B'=" << report.potential.raw << " B=" << report.potential.normalizer << "\n";
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c > 0) out << "  ";
      if (c == 0) out << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
      else out << std::right << std::setw(static_cast<int>(width[c])) << cells[c];
    }
    out << "\n";
  };
  emit(header);
  for (const auto& r : rows) emit(r);
  out << "(*) weak middleman, (**) strong middleman\n";
  return out.str();
}

namespace {

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char ch : label) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_dot(const DirectedGraph& g) {
  const auto classes = classify(g);
  std::ostringstream out;
  out << "digraph middlemen {\n";
  for (NodeId v = 0; v < g.size(); ++v) {
    out << "  " << quoted(g.label(v));
    if (classes[v] != MiddlemanClass::NonMiddleman)
      out << " [class=\"" << to_string(classes[v]) << "\"]";
    out << ";\n";
  }
  for (auto [from, to] : g.arcs())
    out << "  " << quoted(g.label(from)) << " -> " << quoted(g.label(to)) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace middlemen
