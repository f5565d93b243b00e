#pragma once

// Laplacian eigenvalues through a bandwidth-reducing permutation and a banded
// symmetric eigensolver. Needs Boost.Graph (header-only) and LAPACKE.

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/cuthill_mckee_ordering.hpp>
#include <Eigen/Core>
#include <lapacke.h>

#include "taugraph/error.hpp"
#include "taugraph/laplacian.hpp"

namespace taugraph {

struct BandOrdering {
  std::vector<VertexId> position;  // position[vertex] in the permuted order
  std::size_t bandwidth = 0;
};

/// Reverse Cuthill-McKee order of the adequate graph behind `lap`.
inline BandOrdering reverse_cuthill_mckee(const DiscreteLaplacian& lap) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const MetrizedGraph& g = lap.graph();
  Graph bg(g.vertex_count());
  for (const Edge& e : g.edges()) boost::add_edge(e.a, e.b, bg);
  std::vector<Graph::vertex_descriptor> order(g.vertex_count());
  boost::cuthill_mckee_ordering(bg, order.rbegin());
  BandOrdering out;
  out.position.resize(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) out.position[order[i]] = i;
  for (const Edge& e : g.edges()) {
    const std::size_t a = out.position[e.a], b = out.position[e.b];
    out.bandwidth = std::max(out.bandwidth, a > b ? a - b : b - a);
  }
  return out;
}

/// Sorted eigenvalues of L from LAPACK's banded solver on the RCM-permuted matrix.
inline Eigen::VectorXd banded_laplacian_spectrum(const DiscreteLaplacian& lap) {
  const BandOrdering ord = reverse_cuthill_mckee(lap);
  const auto n = static_cast<lapack_int>(lap.dimension());
  const auto kd = static_cast<lapack_int>(ord.bandwidth);
  const lapack_int ldab = kd + 1;
  // Lower band storage, column major: ab(i - j, j) = L(i, j) for j <= i <= j + kd.
  std::vector<double> ab(static_cast<std::size_t>(ldab) * static_cast<std::size_t>(n), 0.0);
  const auto& sp = lap.sparse();
  for (int col = 0; col < sp.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(sp, col); it; ++it) {
      const std::size_t i = ord.position[static_cast<std::size_t>(it.row())];
      const std::size_t j = ord.position[static_cast<std::size_t>(it.col())];
      if (i < j) continue;
      ab[(i - j) + static_cast<std::size_t>(ldab) * j] = it.value();
    }
  }
  Eigen::VectorXd w(n);
  const lapack_int info = LAPACKE_dsbev(LAPACK_COL_MAJOR, 'N', 'L', n, kd, ab.data(), ldab, w.data(), nullptr, 1);
  if (info != 0) throw Error(ErrorCode::NumericalInconsistency, "banded eigensolver failed");
  return w;
}

}  // namespace taugraph
