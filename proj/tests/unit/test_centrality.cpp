#include <doctest.h>

#include <cmath>
#include <numeric>

#include "middlemen/centrality.hpp"
#include "middlemen/reachability.hpp"
#include "oracle/oracle.hpp"
#include "support.hpp"

using namespace middlemen;
using namespace middlemen::testing;

namespace {

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

double sum_squares(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

TEST_CASE("betweenness on fig4 and its undirected version") {
  const auto fig4 = load("fig4");
  auto raw = betweenness(fig4, false).scores;
  for (const char* v : {"4", "5", "6"}) CHECK(raw[fig4.id(v)] == doctest::Approx(4.0));
  for (const char* v : {"7", "8"}) CHECK(raw[fig4.id(v)] == doctest::Approx(6.0));

  const auto u = underlying_undirected(fig4);
  auto uraw = betweenness(u, false).scores;
  CHECK(uraw[u.id("4")] == doctest::Approx(16.4));
  CHECK(uraw[u.id("7")] == doctest::Approx(25.0));
  auto unorm = betweenness(u, true);
  CHECK(unorm.scores[u.id("4")] == doctest::Approx(16.4 / 36.0));
  CHECK(unorm.scores[u.id("7")] == doctest::Approx(25.0 / 36.0));
  CHECK(unorm.scores[u.id("9")] == doctest::Approx(0.4 / 36.0));
}

TEST_CASE("betweenness of a path middle node") {
  DirectedGraph path({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto raw = betweenness(path, false).scores;
  CHECK(raw == std::vector<double>{0.0, 1.0, 0.0});
  CHECK(betweenness(path, true).scores[1] == doctest::Approx(0.5));
}

TEST_CASE("raw betweenness equals the total interior geodesic mass") {
  for (const auto& f : fixtures()) {
    const auto& g = f.graph;
    double expected = 0.0;
    for (NodeId a = 0; a < g.size(); ++a)
      for (NodeId b = 0; b < g.size(); ++b) {
        if (a == b) continue;
        auto c = geodesic_counts(g, a, b);
        if (c.total > 0) expected += double(*geodesic_distance(g, a, b) - 1);
      }
    CHECK(sum(betweenness(g, false).scores) == doctest::Approx(expected));
  }
}

TEST_CASE("betweenness agrees with geodesic enumeration on random graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = oracle::random_digraph(7, 0.3, seed);
    std::vector<double> expected(g.size(), 0.0);
    for (NodeId a = 0; a < g.size(); ++a)
      for (NodeId b = 0; b < g.size(); ++b) {
        if (a == b) continue;
        auto t = oracle::geodesic_counts_oracle(g, a, b);
        if (t.total == 0) continue;
        for (NodeId v = 0; v < g.size(); ++v) expected[v] += double(t.through[v]) / double(t.total);
      }
    auto raw = betweenness(g, false).scores;
    for (NodeId v = 0; v < g.size(); ++v) CHECK(raw[v] == doctest::Approx(expected[v]));
  }
}

TEST_CASE("closeness") {
  const auto u = underlying_undirected(load("fig4"));
  auto c = closeness(u).scores;
  CHECK(c[u.id("1")] == doctest::Approx(9.0 / 25.0));
  CHECK(c[u.id("7")] == doctest::Approx(9.0 / 13.0));
  CHECK(c[u.id("9")] == doctest::Approx(9.0 / 19.0));
  CHECK(c[u.id("4")] == doctest::Approx(9.0 / 17.0));
  const auto fig1 = load("fig1");
  CHECK(closeness(fig1).scores[fig1.id("7")] == 0.0);
  // Node 6 reaches only 7, at distance 1: (1/6) * (1/1).
  CHECK(closeness(fig1).scores[fig1.id("6")] == doctest::Approx(1.0 / 6.0));
}

TEST_CASE("degree centrality") {
  const auto u = underlying_undirected(load("fig4"));
  auto d = degree_centrality(u);
  CHECK(d.total.scores == std::vector<double>{1, 1, 1, 3, 3, 3, 5, 5, 2, 2});
  const auto fig1 = load("fig1");
  auto d1 = degree_centrality(fig1);
  CHECK(d1.in.scores[fig1.id("2")] == 1.0);
  CHECK(d1.out.scores[fig1.id("2")] == 2.0);
  CHECK(d1.total.scores[fig1.id("2")] == 3.0);
  DirectedGraph lonely({"a", "b"}, {});
  CHECK(degree_centrality(lonely).total.scores == std::vector<double>{0, 0});
  // Reciprocated arcs count one neighbour.
  DirectedGraph pair({"a", "b"}, {{0, 1}, {1, 0}});
  CHECK(degree_centrality(pair).total.scores == std::vector<double>{1, 1});
}

TEST_CASE("Bonacich power") {
  const auto u = underlying_undirected(load("fig4"));
  auto c = bonacich(u, 0.2);
  CHECK(sum_squares(c.scores) == doctest::Approx(10.0).epsilon(1e-9));
  const std::vector<double> table{0.328, 0.328, 0.328, 1.047, 1.047, 1.047, 1.565, 1.565, 0.863, 0.863};
  for (NodeId v = 0; v < u.size(); ++v) CHECK(std::abs(c.scores[v] - table[v]) < 0.01);
  CHECK(c.parameters.at("beta") == 0.2);

  const auto fig1 = load("fig1");
  auto zero = bonacich(fig1, 0.0).scores;
  const double scale = zero[0] / 2.0;
  for (NodeId v = 0; v < fig1.size(); ++v)
    CHECK(zero[v] == doctest::Approx(scale * double(fig1.out_degree(v))));

  DirectedGraph empty({"a", "b", "c"}, {});
  CHECK(bonacich(empty, 0.2).scores == std::vector<double>{0, 0, 0});
}

TEST_CASE("Bonacich refuses beta beyond the spectral bound") {
  const auto u = underlying_undirected(load("fig4"));
  CHECK(spectral_radius(u) == doctest::Approx(3.2593).epsilon(1e-4));
  CHECK_THROWS_AS(bonacich(u, 0.4), SpectralBoundError);
  try {
    bonacich(u, 0.4);
  } catch (const SpectralBoundError& e) {
    CHECK(e.bound() == doctest::Approx(1.0 / 3.2593).epsilon(1e-4));
  }
  // Acyclic graphs have spectral radius 0, so any beta is admissible.
  CHECK(spectral_radius(load("fig1")) == doctest::Approx(0.0));
  CHECK_NOTHROW(bonacich(load("fig1"), 5.0));
}

TEST_CASE("PageRank") {
  const auto u = underlying_undirected(load("fig4"));
  auto pr = pagerank(u, 0.85).scores;
  CHECK(sum(pr) == doctest::Approx(1.0).epsilon(1e-9));
  auto at = [&](const char* v) { return pr[u.id(v)]; };
  CHECK(at("7") > at("4"));
  CHECK(at("4") > at("9"));
  CHECK(at("9") > at("1"));
  CHECK(at("7") == doctest::Approx(at("8")));

  DirectedGraph single({"x"}, {});
  CHECK(pagerank(single).scores[0] == doctest::Approx(1.0));
  auto ring = pagerank(underlying_undirected(load("cycle6"))).scores;
  for (double x : ring) CHECK(x == doctest::Approx(1.0 / 6.0));
  // Dangling mass is spread uniformly so the sum stays 1 on a DAG.
  CHECK(sum(pagerank(load("fig1")).scores) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(pagerank(u, 1.0), std::domain_error);
  CHECK_THROWS_AS(pagerank(u, 0.0), std::domain_error);
}

TEST_CASE("beta measure") {
  const auto u = underlying_undirected(load("fig4"));
  auto b = beta_measure(u).scores;
  CHECK(b[u.id("1")] == doctest::Approx(1.0 / 3.0));
  CHECK(b[u.id("4")] == doctest::Approx(1.4));
  CHECK(b[u.id("7")] == doctest::Approx(2.0));
  CHECK(b[u.id("9")] == doctest::Approx(0.4));
}

TEST_CASE("beta measure distributes one unit per node with predecessors") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = oracle::random_digraph(8, 0.25, seed);
    std::size_t receivers = 0;
    for (NodeId v = 0; v < g.size(); ++v) receivers += g.in_degree(v) > 0 ? 1 : 0;
    CHECK(sum(beta_measure(g).scores) == doctest::Approx(double(receivers)));
  }
}

TEST_CASE("middlemen are underrated by betweenness and Bonacich on fig4") {
  const auto fig4 = load("fig4");
  const auto u = underlying_undirected(fig4);
  for (const auto* g : {&fig4, &u}) {
    auto bc = betweenness(*g, false).scores;
    CHECK(bc[g->id("7")] > bc[g->id("4")]);
  }
  auto e = bonacich(u, 0.2).scores;
  CHECK(e[u.id("7")] > e[u.id("4")]);
}
