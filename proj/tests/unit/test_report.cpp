#include <doctest.h>

#include "middlemen/centrality.hpp"
#include "middlemen/report.hpp"
#include "support.hpp"

using namespace middlemen;
using namespace middlemen::testing;
using nlohmann::json;

TEST_CASE("JSON report keys and values for fig1") {
  const auto g = load("fig1");
  auto j = to_json(analyze(g));
  for (const char* key : {"n", "arcs", "weakly_connected", "strongly_connected", "components",
                          "B_prime", "B"})
    CHECK(j["graph"].contains(key));
  CHECK(j["graph"]["B_prime"] == 10);
  CHECK(j["version"] == kVersion);
  REQUIRE(j["nodes"].size() == 7);
  for (const auto& node : j["nodes"])
    for (const char* key : {"label", "role", "middleman_class", "brokerage", "nu", "nu_star",
                            "contested", "degree_in", "degree_out", "closeness", "betweenness",
                            "bonacich", "pagerank", "beta_measure"})
      CHECK(node.contains(key));

  auto node = [&](int label) { return j["nodes"][label - 1]; };
  CHECK(node(2)["middleman_class"] == "weak");
  CHECK(node(5)["middleman_class"] == "weak");
  CHECK(node(6)["middleman_class"] == "strong");
  CHECK(node(2)["nu"].get<double>() == doctest::Approx(0.1));
  CHECK(node(5)["nu"].get<double>() == doctest::Approx(0.2));
  CHECK(node(6)["nu"].get<double>() == doctest::Approx(0.5));
  CHECK(node(3)["contested"] == true);
  CHECK(node(6)["contested"] == false);
  CHECK(node(1)["contested"] == "vacuous");
  CHECK(node(1)["role"] == "source");
  CHECK_FALSE(node(3).contains("min_contesting_sets"));
}

TEST_CASE("minimal sets appear in the report only on request") {
  const auto g = load("fig2");
  AnalysisOptions options;
  options.minimal_sets = true;
  auto j = to_json(analyze(g, options));
  CHECK(j["nodes"][3]["min_contesting_sets"] == json::parse(R"([["1","2"],["2","3"]])"));
}

TEST_CASE("reports are deterministic") {
  for (const auto& f : fixtures()) {
    CHECK(to_json(analyze(f.graph)).dump(2) == to_json(analyze(f.graph)).dump(2));
    CHECK(render_table(analyze(f.graph)) == render_table(analyze(f.graph)));
    CHECK(render_dot(f.graph) == render_dot(f.graph));
  }
}

TEST_CASE("ranking: power, then brokerage, then input order") {
  const auto g = load("fig1");
  auto report = analyze(g);
  std::vector<std::string> order;
  for (auto k : ranking(report)) order.push_back(report.nodes[k].label);
  CHECK(order == std::vector<std::string>{"6", "5", "2", "1", "3", "4", "7"});
}

TEST_CASE("text table marks middlemen and uses three decimals") {
  auto text = render_table(analyze(load("star6")));
  CHECK(text.find("6(**)") != std::string::npos);
  CHECK(text.find("1.000") != std::string::npos);
  auto fig1 = render_table(analyze(load("fig1")));
  CHECK(fig1.find("2(*)") != std::string::npos);
  CHECK(fig1.find("3.333") != std::string::npos);
  CHECK(format_fixed(-0.0) == "0.000");
  CHECK(format_fixed(2.0 / 3.0) == "0.667");
}

TEST_CASE("DOT export") {
  auto dot = render_dot(load("fig1"));
  CHECK(dot.rfind("digraph middlemen {", 0) == 0);
  CHECK(dot.find("\"6\" [class=\"strong\"]") != std::string::npos);
  CHECK(dot.find("\"2\" [class=\"weak\"]") != std::string::npos);
  CHECK(dot.find("\"1\" -> \"2\";") != std::string::npos);
  CHECK(render_dot(load("fig2")).find("class=") == std::string::npos);

  auto empty = render_dot(DirectedGraph({"a", "b\"q"}, {}));
  CHECK(empty == "digraph middlemen {\n  \"a\";\n  \"b\\\"q\";\n}\n");
}

TEST_CASE("an out-of-range beta surfaces from the analysis") {
  AnalysisOptions options;
  options.beta = 0.5;
  CHECK_THROWS_AS(analyze(underlying_undirected(load("fig4")), options), SpectralBoundError);
}
