#include <gtest/gtest.h>

#include <random>

#include "taugraph/analytic.hpp"
#include "taugraph/families.hpp"
#include "taugraph/large.hpp"

using namespace taugraph;

TEST(LaplacianSolver, ColumnsMatchDensePseudoInverse) {
  std::mt19937_64 rng(201);
  const DiscreteLaplacian lap(random_bridgeless_graph(40, 20, rng));
  const PseudoInverse lp = pseudo_inverse(lap);
  const LaplacianSolver solver(lap);
  for (VertexId p : {0u, 7u, 39u}) {
    const Eigen::VectorXd col = solver.column(p);
    EXPECT_LT((col - lp.entries().col(static_cast<Eigen::Index>(p))).cwiseAbs().maxCoeff(), 1e-9);
    EXPECT_NEAR(solver.resistance(p, 12), resistance(lp, p, 12), 1e-9);
  }
  EXPECT_EQ(solver.resistance(5, 5), 0.0);
}

TEST(TraceIterative, MatchesDenseTrace) {
  std::mt19937_64 rng(203);
  for (const MetrizedGraph& g : {random_connected_graph(60, 30, rng), normalize(mm_graph({4, 5})), circle(2)}) {
    const double dense = compute_tau(g).tau;
    std::size_t calls = 0;
    const TauResult r = tau_trace_iterative(g, {}, [&](std::size_t done, std::size_t total) {
      ++calls;
      EXPECT_LE(done, total);
    });
    EXPECT_NEAR(r.tau, dense, 1e-9 * dense);
    EXPECT_EQ(r.method, TauMethod::Trace);
    EXPECT_GT(calls, 0u);
  }
}

TEST(TraceIterative, HexMatchesBlochSums) {
  const TauResult r = tau_trace_iterative(normalize(hexagonal_torus({9, 9})));
  EXPECT_NEAR(r.tau, tau_hex_analytic(9, 9).tau, 1e-10);
}

TEST(Hutchinson, DeterministicAndCovering) {
  const MetrizedGraph g = hexagonal_torus({4, 4});
  const DiscreteLaplacian lap(g);
  const LaplacianSolver solver(lap);
  const TraceEstimate a = hutchinson_trace(solver, 64, 9);
  const TraceEstimate b = hutchinson_trace(solver, 64, 9);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.probes, 64u);
  const double exact = hex_trace_pinv(4, 4);
  EXPECT_LT(std::abs(a.value - exact), 2.0 * a.ci_halfwidth);
  EXPECT_THROW(hutchinson_trace(solver, 1, 1), Error);
}

TEST(SpecialLarge, CloseToExactOnHex) {
  const MetrizedGraph g = normalize(hexagonal_torus({4, 4}));
  const TauResult r = tau_special_large(g);
  const double exact = tau_hex_analytic(4, 4).tau;
  ASSERT_TRUE(r.diagnostics.trace_ci_halfwidth.has_value());
  EXPECT_LT(std::abs(r.tau - exact), 3.0 * *r.diagnostics.trace_ci_halfwidth + 1e-12);
  EXPECT_NEAR(1.0 / r.tau, 57.2166, 0.5);
  EXPECT_EQ(r.method, TauMethod::Special);
}

TEST(SpecialLarge, RefusesIrregularGraphs) {
  std::mt19937_64 rng(207);
  try {
    tau_special_large(random_bridgeless_graph(30, 10, rng));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpecialConditionsNotMet);
  }
  EXPECT_THROW(tau_special_large(circle(2)), Error);
}
