#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "taugraph/families.hpp"
#include "taugraph/laplacian.hpp"

using namespace taugraph;

namespace {

std::vector<oracle::E> to_oracle(const MetrizedGraph& g) {
  std::vector<oracle::E> out;
  for (const Edge& e : g.edges()) out.push_back({e.a, e.b, e.length});
  return out;
}

}  // namespace

TEST(BuildLaplacian, TriangleAndPath) {
  const Eigen::MatrixXd tri = DiscreteLaplacian(circle(3)).dense();
  EXPECT_EQ(tri, (Eigen::Matrix3d() << 2, -1, -1, -1, 2, -1, -1, -1, 2).finished());
  const Eigen::MatrixXd path = DiscreteLaplacian(path_graph(2)).dense();
  EXPECT_EQ(path, (Eigen::Matrix3d() << 1, -1, 0, -1, 2, -1, 0, -1, 1).finished());
}

TEST(BuildLaplacian, RowSumsVanish) {
  std::mt19937_64 rng(3);
  const DiscreteLaplacian lap(random_connected_graph(25, 30, rng));
  const Eigen::MatrixXd l = lap.dense();
  EXPECT_LT(l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-9 * l.cwiseAbs().maxCoeff());
}

TEST(BuildLaplacian, AdequatesAutomatically) {
  const DiscreteLaplacian lap(circle(1));
  EXPECT_EQ(lap.dimension(), 3u);
  EXPECT_EQ(lap.original_vertex_count(), 1u);
  EXPECT_TRUE(lap.graph().is_adequate());
}

TEST(BuildLaplacian, Disconnected) {
  try {
    DiscreteLaplacian lap(MetrizedGraph(3, {{0, 1, 1.0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(PseudoInverse, CompleteFour) {
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(complete(4)));
  // Unit K_v: L+ = (1/v)(I - J/v), so l+_pp = 3/16 and l+_pq = -1/16.
  for (VertexId p = 0; p < 4; ++p) {
    EXPECT_NEAR(lp(p, p), 3.0 / 16, 1e-14);
    for (VertexId q = 0; q < 4; ++q)
      if (p != q) EXPECT_NEAR(lp(p, q), -1.0 / 16, 1e-14);
  }
  EXPECT_NEAR(lp.trace(), 0.75, 1e-14);
}

TEST(PseudoInverse, TriangleTrace) {
  EXPECT_NEAR(pseudo_inverse(DiscreteLaplacian(circle(3))).trace(), 2.0 / 3, 1e-14);
  EXPECT_NEAR(trace_pinv_spectral(DiscreteLaplacian(circle(3))), 2.0 / 3, 1e-14);
}

TEST(PseudoInverse, MoorePenroseProperties) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 5; ++k) {
    const DiscreteLaplacian lap(random_connected_graph(10 + 5 * k, 10, rng));
    const Eigen::MatrixXd l = lap.dense();
    const PseudoInverse lp = pseudo_inverse(lap);
    const Eigen::MatrixXd& p = lp.entries();
    EXPECT_LT((l * p * l - l).norm(), 1e-8 * l.norm());
    EXPECT_LT((p * l * p - p).norm(), 1e-8 * p.norm());
    EXPECT_LT((p - p.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT(p.rowwise().sum().cwiseAbs().maxCoeff(), 1e-9 * lp.trace());
  }
}

TEST(PseudoInverse, DenseAndSpectralAgree) {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 4; ++k) {
    const DiscreteLaplacian lap(random_connected_graph(40 + 20 * k, 25, rng));
    const PseudoInverse d = pseudo_inverse(lap, PinvRoute::Dense);
    const PseudoInverse s = pseudo_inverse(lap, PinvRoute::Spectral);
    EXPECT_LT((d.entries() - s.entries()).cwiseAbs().maxCoeff(), 1e-8 * d.entries().cwiseAbs().maxCoeff());
    EXPECT_NEAR(d.trace(), s.trace(), 1e-8 * d.trace());
    EXPECT_NEAR(trace_pinv_spectral(lap), d.trace(), 1e-8 * d.trace());
  }
}

TEST(Resistance, Examples) {
  const PseudoInverse tri = pseudo_inverse(DiscreteLaplacian(circle(3)));
  EXPECT_NEAR(resistance(tri, 0, 1), 2.0 / 3, 1e-14);
  EXPECT_EQ(resistance(tri, 2, 2), 0.0);
  const PseudoInverse k4 = pseudo_inverse(DiscreteLaplacian(complete(4)));
  for (VertexId p = 0; p < 4; ++p)
    for (VertexId q = p + 1; q < 4; ++q) EXPECT_NEAR(resistance(k4, p, q), 0.5, 1e-14);
  try {
    resistance(tri, 0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
  }
}

TEST(Resistance, MatchesGroundedOracle) {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 8; ++k) {
    const MetrizedGraph g = random_connected_graph(6 + 3 * k, 2 + k, rng);
    const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(g));
    const auto edges = to_oracle(g);
    for (VertexId p = 0; p < g.vertex_count(); p += 2) {
      const auto r = oracle::resistances_to(g.vertex_count(), edges, p);
      for (VertexId q = 0; q < g.vertex_count(); ++q) {
        EXPECT_NEAR(resistance(lp, q, p), static_cast<double>(r[q]), 1e-11 * (1.0 + static_cast<double>(r[q])));
      }
    }
  }
}

TEST(Resistance, IsAMetric) {
  std::mt19937_64 rng(23);
  const MetrizedGraph g = random_connected_graph(18, 12, rng);
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(g));
  const std::size_t v = g.vertex_count();
  for (VertexId p = 0; p < v; ++p)
    for (VertexId q = 0; q < v; ++q) {
      EXPECT_GE(resistance(lp, p, q), -1e-12);
      EXPECT_NEAR(resistance(lp, p, q), resistance(lp, q, p), 1e-13);
      for (VertexId s = 0; s < v; ++s) EXPECT_LE(resistance(lp, p, s), resistance(lp, p, q) + resistance(lp, q, s) + 1e-9);
    }
}

TEST(Voltage, Identities) {
  std::mt19937_64 rng(29);
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(random_connected_graph(12, 8, rng)));
  for (VertexId p = 0; p < 12; ++p)
    for (VertexId q = 0; q < 12; ++q) {
      EXPECT_NEAR(voltage(lp, p, p, q), 0.0, 1e-13);
      EXPECT_NEAR(voltage(lp, p, q, q), resistance(lp, p, q), 1e-13);
      for (VertexId s = 0; s < 12; ++s) EXPECT_GE(voltage(lp, p, q, s), -1e-12);
    }
}

TEST(Voltage, TriangleDistinctVertices) {
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(circle(3)));
  EXPECT_NEAR(voltage(lp, 0, 1, 2), 1.0 / 3, 1e-14);
}

TEST(Voltage, MatchesGroundedOracle) {
  // j_p(q,s) = (r(q,p) + r(s,p) - r(q,s)) / 2 for a grounded p.
  std::mt19937_64 rng(31);
  const MetrizedGraph g = random_connected_graph(9, 6, rng);
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(g));
  const auto edges = to_oracle(g);
  for (VertexId p = 0; p < 9; ++p)
    for (VertexId q = 0; q < 9; ++q)
      for (VertexId s = 0; s < 9; ++s) {
        const long double j = (oracle::resistance(9, edges, q, p) + oracle::resistance(9, edges, s, p) -
                               oracle::resistance(9, edges, q, s)) / 2;
        EXPECT_NEAR(voltage(lp, p, q, s), static_cast<double>(j), 1e-11);
      }
}

TEST(TraceIdentities, CompleteFour) {
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(complete(4)));
  double total = 0.0;
  for (VertexId p = 0; p < 4; ++p)
    for (VertexId q = 0; q < 4; ++q) total += resistance(lp, p, q);
  EXPECT_NEAR(total, 6.0, 1e-13);
  EXPECT_NEAR(total, 2 * 4 * lp.trace(), 1e-13);
}

TEST(TraceIdentities, ResidualsSmallOnRandomGraphs) {
  std::mt19937_64 rng(37);
  for (std::size_t v : {1u, 2u, 15u, 30u, 60u}) {
    const MetrizedGraph g = v == 1 ? MetrizedGraph(1, {}) : random_connected_graph(v, v / 2, rng);
    const TraceIdentityResiduals r = resistance_sum_checks(pseudo_inverse(DiscreteLaplacian(g)));
    EXPECT_LT(r.row_resistance_sum, 1e-9);
    EXPECT_LT(r.total_resistance_sum, 1e-9 * (1.0 + v * v));
    EXPECT_LT(r.voltage_sum, 1e-9);
    EXPECT_LT(r.row_centering, 1e-9);
    EXPECT_GT(r.voltage_pairs_checked, 0u);
  }
}

TEST(Spectrum, SingleZeroEigenvalue) {
  const Eigen::VectorXd lambda = laplacian_spectrum(DiscreteLaplacian(path_graph(3)));
  EXPECT_NEAR(lambda(0), 0.0, 1e-12);
  EXPECT_GT(lambda(1), 1e-3);
}
