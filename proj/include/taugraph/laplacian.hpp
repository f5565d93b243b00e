#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "taugraph/graph.hpp"
#include "taugraph/summation.hpp"

namespace taugraph {

/// Default vertex cap for the dense pseudo-inverse route.
inline constexpr std::size_t kDenseSizeLimit = 6'000;

/// L = D - A with off-diagonal weights -1/L_k, built on an adequate vertex set.
///
/// The graph handed in is adequated first when necessary. Original vertices keep
/// their indices, so resistance queries on them can use the same ids; vertices
/// inserted by adequation follow at indices >= original_vertex_count().
class DiscreteLaplacian {
 public:
  explicit DiscreteLaplacian(const MetrizedGraph& g)
      : original_vertex_count_(g.vertex_count()), graph_(g.is_adequate() ? g : make_adequate(g)) {
    if (!graph_.is_connected()) throw Error(ErrorCode::Disconnected, "Laplacian requires a connected graph");
    const auto n = static_cast<Eigen::Index>(graph_.vertex_count());
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(4 * graph_.edge_count());
    for (const Edge& e : graph_.edges()) {
      const double w = 1.0 / e.length;
      const auto a = static_cast<Eigen::Index>(e.a), b = static_cast<Eigen::Index>(e.b);
      trip.emplace_back(a, a, w);
      trip.emplace_back(b, b, w);
      trip.emplace_back(a, b, -w);
      trip.emplace_back(b, a, -w);
    }
    matrix_.resize(n, n);
    matrix_.setFromTriplets(trip.begin(), trip.end());
    matrix_.makeCompressed();
  }

  std::size_t dimension() const noexcept { return graph_.vertex_count(); }
  std::size_t original_vertex_count() const noexcept { return original_vertex_count_; }
  /// The adequate graph the matrix was built from.
  const MetrizedGraph& graph() const noexcept { return graph_; }
  const Eigen::SparseMatrix<double>& sparse() const noexcept { return matrix_; }
  Eigen::MatrixXd dense() const { return Eigen::MatrixXd(matrix_); }

 private:
  std::size_t original_vertex_count_;
  MetrizedGraph graph_;
  Eigen::SparseMatrix<double> matrix_;
};

inline DiscreteLaplacian build_laplacian(const MetrizedGraph& g) { return DiscreteLaplacian(g); }

enum class PinvRoute { Dense, Spectral };

inline const char* to_string(PinvRoute r) { return r == PinvRoute::Dense ? "dense" : "spectral"; }

/// Moore-Penrose inverse of a connected-graph Laplacian (symmetric, doubly centered).
class PseudoInverse {
 public:
  PseudoInverse(Eigen::MatrixXd entries, PinvRoute route) : entries_(std::move(entries)), route_(route) {
    CompensatedSum t;
    for (Eigen::Index i = 0; i < entries_.rows(); ++i) t.add(entries_(i, i));
    trace_ = t.value();
  }

  std::size_t dimension() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  double operator()(VertexId p, VertexId q) const {
    return entries_(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(q));
  }
  double trace() const noexcept { return trace_; }
  PinvRoute route() const noexcept { return route_; }

 private:
  Eigen::MatrixXd entries_;
  double trace_ = 0.0;
  PinvRoute route_;
};

namespace detail {

inline PseudoInverse dense_pseudo_inverse(const DiscreteLaplacian& lap) {
  const auto n = static_cast<Eigen::Index>(lap.dimension());
  const double inv_n = 1.0 / static_cast<double>(n);
  Eigen::MatrixXd shifted = lap.dense();
  shifted.array() += inv_n;
  Eigen::LLT<Eigen::MatrixXd> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::SingularBeyondNullspace, "L + J/v is not positive definite");
  }
  const auto diag = llt.matrixLLT().diagonal();
  if (diag.minCoeff() <= 1e-12 * diag.maxCoeff()) {
    throw Error(ErrorCode::SingularBeyondNullspace, "L has more than one zero eigenvalue");
  }
  Eigen::MatrixXd inv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  inv.array() -= inv_n;
  Eigen::MatrixXd sym = 0.5 * (inv + inv.transpose());
  return PseudoInverse(std::move(sym), PinvRoute::Dense);
}

inline PseudoInverse spectral_pseudo_inverse(const DiscreteLaplacian& lap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.dense());
  if (es.info() != Eigen::Success) throw Error(ErrorCode::SingularBeyondNullspace, "eigensolver failed");
  const Eigen::VectorXd& lambda = es.eigenvalues();
  const double tol = 1e-9 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  Eigen::VectorXd inv(lambda.size());
  int zeros = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) <= tol) {
      inv(i) = 0.0;
      ++zeros;
    } else {
      inv(i) = 1.0 / lambda(i);
    }
  }
  if (zeros > 1) throw Error(ErrorCode::SingularBeyondNullspace, "L has more than one zero eigenvalue");
  const Eigen::MatrixXd& vecs = es.eigenvectors();
  Eigen::MatrixXd p = vecs * inv.asDiagonal() * vecs.transpose();
  Eigen::MatrixXd sym = 0.5 * (p + p.transpose());
  return PseudoInverse(std::move(sym), PinvRoute::Spectral);
}

inline void check_index(const PseudoInverse& lp, VertexId x) {
  if (x >= lp.dimension()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(x) + " outside [0, " + std::to_string(lp.dimension()) + ")");
  }
}

}  // namespace detail

/// Dense route: (L + J/v)^-1 - J/v. Spectral route: sum over nonzero eigenpairs.
inline PseudoInverse pseudo_inverse(const DiscreteLaplacian& lap, PinvRoute route = PinvRoute::Dense) {
  return route == PinvRoute::Dense ? detail::dense_pseudo_inverse(lap) : detail::spectral_pseudo_inverse(lap);
}

/// Sorted Laplacian eigenvalues.
inline Eigen::VectorXd laplacian_spectrum(const DiscreteLaplacian& lap) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap.dense(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// tr(L+) from the eigenvalues alone; the smallest eigenvalue is the nullspace.
inline double trace_pinv_spectral(const DiscreteLaplacian& lap) {
  const Eigen::VectorXd lambda = laplacian_spectrum(lap);
  const double tol = 1e-9 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  if (lambda.size() > 1 && std::abs(lambda(1)) <= tol) {
    throw Error(ErrorCode::SingularBeyondNullspace, "L has more than one zero eigenvalue");
  }
  CompensatedSum s;
  for (Eigen::Index i = 1; i < lambda.size(); ++i) s.add(1.0 / lambda(i));
  return s.value();
}

/// r(p,q) = l+_pp - 2 l+_pq + l+_qq.
inline double resistance(const PseudoInverse& lp, VertexId p, VertexId q) {
  detail::check_index(lp, p);
  detail::check_index(lp, q);
  if (p == q) return 0.0;
  return lp(p, p) - 2.0 * lp(p, q) + lp(q, q);
}

/// j_p(q,s): potential at q when unit current enters at s and exits at the grounded p.
inline double voltage(const PseudoInverse& lp, VertexId p, VertexId q, VertexId s) {
  detail::check_index(lp, p);
  detail::check_index(lp, q);
  detail::check_index(lp, s);
  return lp(p, p) - lp(p, q) - lp(p, s) + lp(q, s);
}

struct TraceIdentityResiduals {
  /// max_p |sum_q r(p,q) - (v l+_pp + tr L+)|
  double row_resistance_sum = 0.0;
  /// |sum_{p,q} r(p,q) - 2 v tr L+|
  double total_resistance_sum = 0.0;
  /// max over checked (p,q) of |sum_s j_s(p,q) - (tr L+ + v l+_pq)|
  double voltage_sum = 0.0;
  /// max |row sum of L+|
  double row_centering = 0.0;
  std::size_t voltage_pairs_checked = 0;
};

/// Residuals of the resistance/voltage trace identities. Voltage pairs are
/// all (p,q) for v <= 40, otherwise a fixed stride sample of about 1600 pairs.
inline TraceIdentityResiduals resistance_sum_checks(const PseudoInverse& lp) {
  TraceIdentityResiduals out;
  const std::size_t v = lp.dimension();
  const double tr = lp.trace();
  const double dv = static_cast<double>(v);
  CompensatedSum total;
  for (VertexId p = 0; p < v; ++p) {
    CompensatedSum row, centering;
    for (VertexId q = 0; q < v; ++q) {
      const double r = resistance(lp, p, q);
      row.add(r);
      total.add(r);
      centering.add(lp(p, q));
    }
    out.row_resistance_sum = std::max(out.row_resistance_sum, std::abs(row.value() - (dv * lp(p, p) + tr)));
    out.row_centering = std::max(out.row_centering, std::abs(centering.value()));
  }
  out.total_resistance_sum = std::abs(total.value() - 2.0 * dv * tr);

  const std::size_t stride = v <= 40 ? 1 : std::max<std::size_t>(1, v / 40);
  for (VertexId p = 0; p < v; p += stride) {
    for (VertexId q = 0; q < v; q += stride) {
      CompensatedSum s;
      for (VertexId base = 0; base < v; ++base) s.add(voltage(lp, base, p, q));
      out.voltage_sum = std::max(out.voltage_sum, std::abs(s.value() - (tr + dv * lp(p, q))));
      ++out.voltage_pairs_checked;
    }
  }
  return out;
}

/// Adequate graph, its Laplacian and pseudo-inverse, computed together.
struct Analysis {
  DiscreteLaplacian laplacian;
  PseudoInverse pinv;

  const MetrizedGraph& graph() const noexcept { return laplacian.graph(); }
};

inline Analysis analyze(const MetrizedGraph& g, PinvRoute route = PinvRoute::Dense) {
  DiscreteLaplacian lap(g);
  PseudoInverse lp = pseudo_inverse(lap, route);
  return Analysis{std::move(lap), std::move(lp)};
}

}  // namespace taugraph
