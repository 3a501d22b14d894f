#include <doctest.h>

#include "middlemen/contestability.hpp"
#include "middlemen/middleman.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace middlemen;
using namespace middlemen::testing;

using Labels = std::set<std::string>;

TEST_CASE("simple path enumeration") {
  const auto g = load("fig1");
  auto paths = oracle::enumerate_simple_paths(g, g.id("1"), g.id("7"));
  std::vector<std::vector<std::string>> text;
  for (const auto& p : paths) {
    std::vector<std::string> labels;
    for (NodeId v : p) labels.push_back(g.label(v));
    text.push_back(labels);
  }
  CHECK(text == std::vector<std::vector<std::string>>{{"1", "2", "4", "6", "7"},
                                                      {"1", "2", "5", "6", "7"},
                                                      {"1", "3", "5", "6", "7"}});
  CHECK(oracle::enumerate_simple_paths(g, g.id("7"), g.id("1")).empty());
  auto direct = oracle::enumerate_simple_paths(g, g.id("1"), g.id("2"));
  REQUIRE(direct.size() == 1);
  CHECK(direct[0].size() == 2);
}

TEST_CASE("oracle middleman sets") {
  const auto fig1 = load("fig1");
  CHECK(labels_of(fig1, oracle::middleman_set_oracle(fig1, fig1.id("1"), fig1.id("7"))) == Labels{"6"});
  CHECK(labels_of(fig1, oracle::middleman_set_oracle(fig1, fig1.id("1"), fig1.id("4"))) == Labels{"2"});
  const auto fig2 = load("fig2");
  CHECK(oracle::middleman_set_oracle(fig2, fig2.id("1"), fig2.id("5")).empty());
}

TEST_CASE("oracle brokerage") {
  const auto fig1 = load("fig1");
  CHECK(oracle::brokerage_oracle(fig1, fig1.id("6")) == 5);
  CHECK(oracle::brokerage_oracle(fig1, fig1.id("3")) == 0);
  const auto cycle = load("cycle6");
  for (NodeId v = 0; v < cycle.size(); ++v) CHECK(oracle::brokerage_oracle(cycle, v) == 10);
}

TEST_CASE("oracle contestability") {
  const auto fig1 = load("fig1");
  CHECK(oracle::contesting_oracle(fig1, fig1.id("3")));
  CHECK_FALSE(oracle::contesting_oracle(fig1, fig1.id("6")));
  const auto fig2 = load("fig2");
  CHECK(oracle::contesting_oracle(fig2, fig2.id("4")));
  CHECK(oracle::contests_oracle(fig2, ids_of(fig2, {"2", "3"}), fig2.id("4")));
  CHECK_FALSE(oracle::contests_oracle(fig2, ids_of(fig2, {"2"}), fig2.id("4")));
}

TEST_CASE("oracle size guards") {
  CHECK_THROWS_AS(oracle::enumerate_simple_paths(complete_graph(13), 0, 1), oracle::GuardError);
  CHECK_THROWS_AS(oracle::contesting_oracle(complete_graph(13), 0), oracle::GuardError);
}

TEST_CASE("random digraph generator") {
  CHECK(oracle::random_digraph(5, 0.0, 7).arc_count() == 0);
  auto full = oracle::random_digraph(4, 1.0, 7);
  CHECK(full.arc_count() == 12);
  CHECK(middleman_set(full).empty());
  CHECK_THROWS_AS(oracle::random_digraph(3, 1.5, 1), std::invalid_argument);

  auto a = oracle::random_digraph(8, 0.3, 42);
  auto b = oracle::random_digraph(8, 0.3, 42);
  CHECK(a.arcs() == b.arcs());
  // Frozen on first run; the draw uses only raw engine output.
  const std::vector<Arc> frozen = {{0, 4}, {0, 6}, {1, 2}, {1, 4}, {2, 5}, {2, 6}, {3, 0}, {3, 2}, {3, 4},
                                   {3, 5}, {4, 1}, {4, 7}, {5, 3}, {5, 4}, {6, 2}, {7, 2}, {7, 3}};
  CHECK(a.arcs() == frozen);
}
