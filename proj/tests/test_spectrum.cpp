#include <gtest/gtest.h>

#include <random>

#include "taugraph/banded_spectrum.hpp"
#include "taugraph/families.hpp"

using namespace taugraph;

namespace {

void expect_same_spectrum(const MetrizedGraph& g, double tol) {
  const DiscreteLaplacian lap(g);
  const Eigen::VectorXd dense = laplacian_spectrum(lap);
  const Eigen::VectorXd banded = banded_laplacian_spectrum(lap);
  ASSERT_EQ(dense.size(), banded.size());
  EXPECT_LT((dense - banded).cwiseAbs().maxCoeff(), tol);
}

}  // namespace

TEST(BandedSpectrum, MatchesDenseOnFamilies) {
  expect_same_spectrum(hexagonal_torus({4, 6}), 1e-12);
  expect_same_spectrum(mm_graph({5, 5}), 1e-12);
  expect_same_spectrum(tt_graph({5, 9, 4}), 1e-12);
  expect_same_spectrum(complete(7), 1e-12);
}

TEST(BandedSpectrum, MatchesDenseOnWeightedRandomGraphs) {
  std::mt19937_64 rng(149);
  for (int k = 0; k < 6; ++k) expect_same_spectrum(random_connected_graph(8 + 5 * k, 2 * k, rng), 1e-11);
}

TEST(BandedSpectrum, SmallBandOnHexTori) {
  EXPECT_LE(reverse_cuthill_mckee(DiscreteLaplacian(hexagonal_torus({1, 249}))).bandwidth, 8u);
  EXPECT_LE(reverse_cuthill_mckee(DiscreteLaplacian(hexagonal_torus({24, 19}))).bandwidth, 64u);
}

TEST(BandedSpectrum, OrderIsAPermutation) {
  const BandOrdering ord = reverse_cuthill_mckee(DiscreteLaplacian(hexagonal_torus({3, 5})));
  std::vector<bool> seen(ord.position.size(), false);
  for (VertexId p : ord.position) {
    ASSERT_LT(p, seen.size());
    EXPECT_FALSE(seen[p]);
    seen[p] = true;
  }
}

TEST(BandedSpectrum, AdequatesBeforeSolving) {
  const Eigen::VectorXd ev = banded_laplacian_spectrum(DiscreteLaplacian(circle(1)));
  EXPECT_EQ(ev.size(), 3);
  EXPECT_NEAR(ev[0], 0.0, 1e-12);
  EXPECT_NEAR(ev[2], 9.0, 1e-12);
}
