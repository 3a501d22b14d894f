#include "middlemen/centrality.hpp"

#include <cmath>
#include <deque>
#include <stack>

#include <Eigen/Dense>

#include "middlemen/reachability.hpp"

namespace middlemen {

namespace {

CentralityVector make_vector(const DirectedGraph& g, std::string measure, std::string norm) {
  CentralityVector v;
  v.measure = std::move(measure);
  v.normalization = std::move(norm);
  v.scores.assign(g.size(), 0.0);
  return v;
}

Eigen::MatrixXd adjacency_matrix(const DirectedGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (auto [from, to] : g.arcs())
    a(static_cast<Eigen::Index>(from), static_cast<Eigen::Index>(to)) = 1.0;
  return a;
}

}  // namespace

CentralityVector betweenness(const DirectedGraph& g, bool normalized) {
  const std::size_t n = g.size();
  const bool symmetric = g.is_symmetric();
  auto result = make_vector(g, "betweenness",
                            !normalized ? "raw"
                            : symmetric ? "(n-1)(n-2)/2"
                                        : "(n-1)(n-2)");

  // Brandes: one BFS per source, dependencies accumulated in reverse order.
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  std::vector<std::vector<NodeId>> parents(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    for (auto& p : parents) p.clear();
    std::stack<NodeId> order;
    std::deque<NodeId> queue{s};
    sigma[s] = 1.0;
    dist[s] = 0;
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      order.push(v);
      for (NodeId w : g.successors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          parents[w].push_back(v);
        }
      }
    }
    while (!order.empty()) {
      NodeId w = order.top();
      order.pop();
      for (NodeId v : parents[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) result.scores[w] += delta[w];
    }
  }

  if (normalized && n > 2) {
    double divisor = static_cast<double>((n - 1) * (n - 2));
    if (symmetric) divisor /= 2.0;
    for (auto& score : result.scores) score /= divisor;
  }
  return result;
}

CentralityVector closeness(const DirectedGraph& g) {
  const std::size_t n = g.size();
  auto result = make_vector(g, "closeness", "reachable-weighted");
  if (n < 2) return result;
  for (NodeId v = 0; v < n; ++v) {
    std::size_t reached = 0, sum = 0;
    auto dist = distances_from(g, v);
    for (NodeId w = 0; w < n; ++w) {
      if (w == v || !dist[w]) continue;
      ++reached;
      sum += *dist[w];
    }
    if (reached == 0) continue;
    const double r = static_cast<double>(reached);
    result.scores[v] = (r / static_cast<double>(n - 1)) * (r / static_cast<double>(sum));
  }
  return result;
}

DegreeVectors degree_centrality(const DirectedGraph& g) {
  DegreeVectors d{make_vector(g, "in_degree", "count"), make_vector(g, "out_degree", "count"),
                  make_vector(g, "degree", "distinct-neighbours")};
  for (NodeId v = 0; v < g.size(); ++v) {
    d.in.scores[v] = static_cast<double>(g.in_degree(v));
    d.out.scores[v] = static_cast<double>(g.out_degree(v));
    auto nb = neighborhood(g, v);
    d.total.scores[v] = static_cast<double>((nb.successors | nb.predecessors).count());
  }
  return d;
}

double spectral_radius(const DirectedGraph& g) {
  if (g.arc_count() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(adjacency_matrix(g), /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) throw NumericError("eigenvalue computation failed");
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

CentralityVector bonacich(const DirectedGraph& g, double beta) {
  const std::size_t n = g.size();
  auto result = make_vector(g, "bonacich", "sum of squares = n");
  result.parameters["beta"] = beta;
  if (n == 0 || g.arc_count() == 0) return result;

  const double radius = spectral_radius(g);
  // 1e-9 keeps beta away from the pole where the solve is meaningless.
  if (std::abs(beta) * radius >= 1.0 - 1e-9) throw SpectralBoundError(std::abs(beta), 1.0 / radius);

  const auto a = adjacency_matrix(g);
  const auto ni = static_cast<Eigen::Index>(n);
  const Eigen::MatrixXd system = Eigen::MatrixXd::Identity(ni, ni) - beta * a;
  const Eigen::VectorXd rhs = a * Eigen::VectorXd::Ones(ni);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(system);
  if (!lu.isInvertible()) throw NumericError("Bonacich system is singular");
  const Eigen::VectorXd c = lu.solve(rhs);
  if (!c.allFinite() || (system * c - rhs).norm() > 1e-8 * (1.0 + rhs.norm()))
    throw NumericError("Bonacich linear solve did not converge");

  const double squares = c.squaredNorm();
  if (squares == 0.0) return result;
  const double alpha = std::sqrt(static_cast<double>(n) / squares);
  result.parameters["alpha"] = alpha;
  for (std::size_t v = 0; v < n; ++v) result.scores[v] = alpha * c(static_cast<Eigen::Index>(v));
  return result;
}

CentralityVector pagerank(const DirectedGraph& g, double damping) {
  if (!(damping > 0.0 && damping < 1.0)) throw std::domain_error("damping must lie in (0, 1)");
  const std::size_t n = g.size();
  auto result = make_vector(g, "pagerank", "sum = 1");
  result.parameters["damping"] = damping;
  if (n == 0) return result;

  const double uniform = 1.0 / static_cast<double>(n);
  std::vector<double> rank(n, uniform), next(n);
  constexpr int kMaxIterations = 100000;
  for (int iteration = 0;; ++iteration) {
    if (iteration == kMaxIterations) throw NumericError("PageRank did not converge");
    double dangling = 0.0;
    for (NodeId v = 0; v < n; ++v)
      if (g.out_degree(v) == 0) dangling += rank[v];
    const double base = (1.0 - damping) * uniform + damping * dangling * uniform;
    std::fill(next.begin(), next.end(), base);
    for (NodeId v = 0; v < n; ++v) {
      if (g.out_degree(v) == 0) continue;
      const double share = damping * rank[v] / static_cast<double>(g.out_degree(v));
      for (NodeId w : g.successors(v)) next[w] += share;
    }
    double change = 0.0;
    for (NodeId v = 0; v < n; ++v) change += std::abs(next[v] - rank[v]);
    rank.swap(next);
    if (change < 1e-12) break;
  }
  result.scores = std::move(rank);
  return result;
}

CentralityVector beta_measure(const DirectedGraph& g) {
  auto result = make_vector(g, "beta_measure", "dominance shares");
  for (NodeId v = 0; v < g.size(); ++v)
    for (NodeId w : g.successors(v))
      result.scores[v] += 1.0 / static_cast<double>(g.in_degree(w));
  return result;
}

}  // namespace middlemen
