#pragma once

#include "bricklayer/graphs.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace bricklayer {

struct MutationParams {
  double mu = 0.01;      // per-letter mutation rate
  double fitness = 1.0;  // raw reproductive rate
};

/// Throws if the no-mutation weight 1 - mu d (a-1) would go negative or the
/// fitness is not positive. Returns true when mu d (a-1) is small enough for
/// the one-mutation-per-generation picture (callers may warn otherwise).
inline bool validate_mutation_params(const MutationParams& p, int d, int a) {
  if (d < 1 || a < 2) throw std::domain_error("mutation params need d >= 1, a >= 2");
  if (p.mu < 0.0 || p.mu > 1.0) throw std::domain_error("mutation rate must lie in [0, 1]");
  if (!(p.fitness > 0.0)) throw std::domain_error("fitness must be positive");
  const double flux = p.mu * d * (a - 1);
  if (flux > 1.0) throw std::domain_error("mu d (a-1) exceeds 1; mutation matrix not stochastic");
  return flux <= 0.1;
}

struct PopulationState {
  std::vector<double> n;     // population per genotype, graph vertex order
  long generation = 0;
  double log_scale = 0.0;    // accumulated renormalization exponent (natural log)

  double total() const {
    double s = 0;
    for (double v : n) s += v;
    return s;
  }
};

inline PopulationState uniform_state(const LabeledGraph& g) {
  if (g.vertex_count() == 0) throw std::domain_error("uniform_state of empty graph");
  return PopulationState{std::vector<double>(g.vertex_count(), 1.0 / g.vertex_count()), 0, 0.0};
}

/// r_i = degree(i) / (d (a-1)) for every vertex.
inline std::vector<double> genotype_robustness(const LabeledGraph& g, int d = 0, int a = 0) {
  const int dd = d == 0 ? g.d : d;
  const int aa = a == 0 ? g.a : a;
  if (dd < 1 || aa < 2) throw std::domain_error("genotype_robustness needs d >= 1, a >= 2");
  const double denom = static_cast<double>(dd) * (aa - 1);
  std::vector<double> r(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) r[i] = g.degree(i) / denom;
  return r;
}

/// (1 - mu d (a-1)) v + mu (A v), matrix-free over the adjacency lists.
inline std::vector<double> mutation_matrix_apply(const LabeledGraph& g, int d, int a, double mu,
                                                 const std::vector<double>& v) {
  if (v.size() != g.vertex_count()) throw std::domain_error("vector/graph size mismatch");
  const double stay = 1.0 - mu * d * (a - 1);
  if (stay < 0.0) throw std::domain_error("mu d (a-1) exceeds 1");
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    double acc = 0;
    for (std::uint32_t j : g.adj[i]) acc += v[j];
    out[i] = stay * v[i] + mu * acc;
  }
  return out;
}

/// Population-weighted average of the genotype robustnesses.
inline double measured_robustness(const LabeledGraph& g, int d, int a,
                                  const PopulationState& state) {
  const std::vector<double> r = genotype_robustness(g, d, a);
  double num = 0, den = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    num += state.n[i] * r[i];
    den += state.n[i];
  }
  if (!(den > 0)) throw std::domain_error("measured_robustness needs positive total population");
  return num / den;
}

struct TrajectoryPoint {
  long generation;
  double robustness;  // measured_robustness after this generation
  double growth;      // total population factor for this generation
  double log_scale;
};

struct EvolveResult {
  PopulationState state;
  std::vector<TrajectoryPoint> trajectory;
};

/// Applies f M per generation with renormalization to unit total population;
/// the discarded magnitude accumulates in log_scale.
inline EvolveResult evolve(const LabeledGraph& g, const MutationParams& params,
                           PopulationState n0, long generations, int d = 0, int a = 0) {
  const int dd = d == 0 ? g.d : d;
  const int aa = a == 0 ? g.a : a;
  validate_mutation_params(params, dd, aa);
  if (generations < 0) throw std::domain_error("generations must be >= 0");
  if (n0.n.size() != g.vertex_count()) throw std::domain_error("population/graph size mismatch");
  if (!(n0.total() > 0)) throw std::domain_error("population must have a positive entry");

  EvolveResult out;
  out.trajectory.reserve(generations);
  std::vector<double> v = n0.n;
  double prev_total = 0;
  for (double x : v) prev_total += x;
  double log_scale = n0.log_scale;
  for (long t = 1; t <= generations; ++t) {
    std::vector<double> w = mutation_matrix_apply(g, dd, aa, params.mu, v);
    double total = 0;
    for (double& x : w) {
      x *= params.fitness;
      total += x;
    }
    if (!(total > 0)) {
      throw std::runtime_error("population vanished at generation " + std::to_string(t) +
                               " (absorbing boundary took everything)");
    }
    const double growth = total / prev_total;
    for (double& x : w) x /= total;
    log_scale += std::log(total);
    v = std::move(w);
    prev_total = 1.0;
    PopulationState snapshot{v, n0.generation + t, log_scale};
    out.trajectory.push_back(
        {n0.generation + t, measured_robustness(g, dd, aa, snapshot), growth, log_scale});
  }
  out.state = PopulationState{std::move(v), n0.generation + generations, log_scale};
  return out;
}

/// The stabilized per-generation growth factor; requires the trajectory tail
/// to have settled to relative changes below rel_tol.
inline double effective_growth(const std::vector<TrajectoryPoint>& trajectory,
                               double rel_tol = 1e-10) {
  if (trajectory.size() < 2) throw std::domain_error("trajectory too short to measure growth");
  const double g1 = trajectory[trajectory.size() - 2].growth;
  const double g2 = trajectory.back().growth;
  if (std::abs(g2 - g1) > rel_tol * std::max(std::abs(g2), 1e-300))
    throw std::runtime_error("growth factor has not stabilized");
  return g2;
}

}  // namespace bricklayer
