#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "middlemen/graph.hpp"

namespace middlemen {

struct CentralityVector {
  std::string measure;
  std::vector<double> scores;  // indexed by NodeId
  std::map<std::string, double> parameters;
  std::string normalization;
};

/// Bonacich parameter at or beyond 1 / spectral radius.
class SpectralBoundError : public std::domain_error {
 public:
  SpectralBoundError(double beta, double bound)
      : std::domain_error("|beta| = " + std::to_string(beta) +
                          " must be below 1/spectral radius = " + std::to_string(bound)),
        beta_(beta),
        bound_(bound) {}
  double beta() const { return beta_; }
  double bound() const { return bound_; }

 private:
  double beta_;
  double bound_;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shortest-path betweenness summed over ordered pairs. Normalized scores
/// divide by (n-1)(n-2), or by (n-1)(n-2)/2 when every arc is reciprocated.
CentralityVector betweenness(const DirectedGraph& g, bool normalized = true);

/// (r/(n-1)) * (r / sum of distances to the r reachable successors); 0 when
/// nothing is reachable.
CentralityVector closeness(const DirectedGraph& g);

struct DegreeVectors {
  CentralityVector in;
  CentralityVector out;
  /// Distinct neighbours, |s_i + p_i|.
  CentralityVector total;
};

DegreeVectors degree_centrality(const DirectedGraph& g);

inline constexpr double kDefaultBonacichBeta = 0.2;
inline constexpr double kDefaultDamping = 0.85;

/// Largest eigenvalue modulus of the adjacency matrix.
double spectral_radius(const DirectedGraph& g);

/// c = alpha (I - beta A)^-1 A 1, scaled so that sum c_i^2 = n.
CentralityVector bonacich(const DirectedGraph& g, double beta = kDefaultBonacichBeta);

/// Damped random surfer; dangling mass spreads uniformly. Scores sum to 1.
CentralityVector pagerank(const DirectedGraph& g, double damping = kDefaultDamping);

/// beta_i = sum over direct successors j of 1 / in-degree(j).
CentralityVector beta_measure(const DirectedGraph& g);

}  // namespace middlemen
