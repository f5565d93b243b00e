#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>

#include "taugraph/laplacian.hpp"
#include "taugraph/structure.hpp"
#include "taugraph/summation.hpp"
#include "taugraph/tau.hpp"

namespace taugraph {

struct IterativeOptions {
  double tolerance = 1e-12;
  Eigen::Index max_iterations = 0;  // 0: Eigen's default (2 * dimension)
};

/// Applies L+ to centered right-hand sides with Jacobi-preconditioned CG.
/// L is singular, but CG stays in range(L) when b is orthogonal to the ones vector.
class LaplacianSolver {
 public:
  explicit LaplacianSolver(const DiscreteLaplacian& lap, IterativeOptions opts = {}) : lap_(lap) {
    cg_.setTolerance(opts.tolerance);
    if (opts.max_iterations > 0) cg_.setMaxIterations(opts.max_iterations);
    cg_.compute(lap_.sparse());
  }

  std::size_t dimension() const noexcept { return lap_.dimension(); }

  /// x = L+ b, with b centered first and x centered on return.
  Eigen::VectorXd apply(Eigen::VectorXd b) const {
    b.array() -= b.mean();
    Eigen::VectorXd x = cg_.solve(b);
    if (cg_.info() != Eigen::Success) {
      throw Error(ErrorCode::NumericalInconsistency, "conjugate gradient did not converge");
    }
    x.array() -= x.mean();
    return x;
  }

  /// Column p of L+.
  Eigen::VectorXd column(VertexId p) const {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension()));
    e(static_cast<Eigen::Index>(p)) = 1.0;
    return apply(std::move(e));
  }

  double resistance(VertexId p, VertexId q) const {
    if (p == q) return 0.0;
    Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dimension()));
    e(static_cast<Eigen::Index>(p)) = 1.0;
    e(static_cast<Eigen::Index>(q)) = -1.0;
    const Eigen::VectorXd x = apply(e);
    return x(static_cast<Eigen::Index>(p)) - x(static_cast<Eigen::Index>(q));
  }

 private:
  const DiscreteLaplacian& lap_;
  Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> cg_;
};

/// Trace route with one CG solve per vertex: exact diag(L+) and edge resistances,
/// memory linear in v + e. Progress callback gets (done, total).
template <class Progress>
TauResult tau_trace_iterative(const MetrizedGraph& g, IterativeOptions opts, Progress&& progress) {
  const DiscreteLaplacian lap(g);
  const MetrizedGraph& ag = lap.graph();
  const LaplacianSolver solver(lap, opts);
  const std::size_t v = ag.vertex_count();
  std::vector<double> diagonal(v);
  std::vector<double> cross(ag.edge_count(), 0.0);  // l+_{a_i b_i}
  const auto adj = ag.incidence();
  for (VertexId p = 0; p < v; ++p) {
    const Eigen::VectorXd col = solver.column(p);
    diagonal[p] = col(static_cast<Eigen::Index>(p));
    for (const Incidence& inc : adj[p]) {
      if (ag.edges()[inc.edge].a == p) cross[inc.edge] = col(static_cast<Eigen::Index>(inc.neighbor));
    }
    progress(p + 1, v);
  }
  CompensatedSum trace;
  for (double d : diagonal) trace.add(d);
  std::vector<double> r(ag.edge_count());
  for (EdgeId id = 0; id < ag.edge_count(); ++id) {
    const Edge& e = ag.edges()[id];
    r[id] = diagonal[e.a] - 2.0 * cross[id] + diagonal[e.b];
  }
  return tau_trace_from_parts(ag, diagonal, trace.value(), r);
}

inline TauResult tau_trace_iterative(const MetrizedGraph& g, IterativeOptions opts = {}) {
  return tau_trace_iterative(g, opts, [](std::size_t, std::size_t) {});
}

struct TraceEstimate {
  double value = 0.0;
  double ci_halfwidth = 0.0;  // 95% normal interval
  std::size_t probes = 0;
};

/// Hutchinson estimate of tr(L+) with Rademacher probes.
inline TraceEstimate hutchinson_trace(const LaplacianSolver& solver, std::size_t probes, std::uint64_t seed) {
  if (probes < 2) throw Error(ErrorCode::ParameterOutOfRange, "need at least 2 probes");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const auto n = static_cast<Eigen::Index>(solver.dimension());
  std::vector<double> samples;
  samples.reserve(probes);
  for (std::size_t k = 0; k < probes; ++k) {
    Eigen::VectorXd z(n);
    for (Eigen::Index i = 0; i < n; ++i) z(i) = coin(rng) ? 1.0 : -1.0;
    const Eigen::VectorXd x = solver.apply(z);
    samples.push_back(z.dot(x));
  }
  CompensatedSum sum;
  for (double s : samples) sum.add(s);
  const double mean = sum.value() / static_cast<double>(probes);
  CompensatedSum var;
  for (double s : samples) var.add((s - mean) * (s - mean));
  const double sd = std::sqrt(var.value() / static_cast<double>(probes - 1));
  return {mean, 1.96 * sd / std::sqrt(static_cast<double>(probes)), probes};
}

struct LargeSpecialOptions {
  std::size_t probes = 64;
  std::size_t sampled_edges = 16;
  std::uint64_t seed = 1;
  IterativeOptions solver;
};

/// Regular-graph formula with tr(L+) estimated stochastically. Preconditions are
/// checked structurally plus CG resistances on a seeded sample of edges.
inline TauResult tau_special_large(const MetrizedGraph& g, LargeSpecialOptions opts = {}) {
  if (!g.is_adequate()) throw Error(ErrorCode::SpecialConditionsNotMet, "no_self_loops_or_multi_edges=FAILED");
  const DiscreteLaplacian lap(g);
  const auto deg = g.degrees();
  const bool regular = std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg.front(); });
  double lmin = g.edges().front().length, lmax = lmin;
  for (const Edge& e : g.edges()) {
    lmin = std::min(lmin, e.length);
    lmax = std::max(lmax, e.length);
  }
  const bool equal_lengths = lmax - lmin <= 1e-12 * lmax;
  const bool bridgeless = find_bridges(g).empty();

  const LaplacianSolver solver(lap, opts.solver);
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
  double rmin = 0.0, rmax = 0.0;
  for (std::size_t k = 0; k < opts.sampled_edges; ++k) {
    const Edge& e = g.edges()[pick(rng)];
    const double r = solver.resistance(e.a, e.b);
    rmin = k == 0 ? r : std::min(rmin, r);
    rmax = k == 0 ? r : std::max(rmax, r);
  }
  const bool equal_r = rmax > 0.0 && (rmax - rmin) / rmax <= 1e-9;
  std::string report = std::string("regular=") + (regular ? "ok" : "FAILED") +
                       "; equal_lengths=" + (equal_lengths ? "ok" : "FAILED") +
                       "; no_self_loops_or_multi_edges=ok; bridgeless=" + (bridgeless ? "ok" : "FAILED") +
                       "; equal_endpoint_resistances(sampled " + std::to_string(opts.sampled_edges) +
                       ")=" + (equal_r ? "ok" : "FAILED");
  if (!(regular && equal_lengths && bridgeless && equal_r)) throw Error(ErrorCode::SpecialConditionsNotMet, report);

  const TraceEstimate est = hutchinson_trace(solver, opts.probes, opts.seed);
  TauResult r = tau_special_from_trace(g, deg.front(), est.value);
  r.diagnostics.special_conditions_report = report;
  r.diagnostics.trace_ci_halfwidth = est.ci_halfwidth / static_cast<double>(g.vertex_count());
  return r;
}

}  // namespace taugraph
