#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "taugraph/analytic.hpp"
#include "taugraph/families.hpp"
#include "taugraph/laplacian.hpp"
#include "taugraph/structure.hpp"
#include "taugraph/tau.hpp"

namespace taugraph {

struct NamedGraph {
  std::string name;
  MetrizedGraph graph;
};

inline double relative_difference(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// Seeded random connected bridgeless graphs with 4..max_vertices vertices.
inline std::vector<NamedGraph> random_bridgeless_pool(std::uint64_t seed, std::size_t count,
                                                      std::size_t max_vertices = 30) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> vdist(4, std::max<std::size_t>(4, max_vertices));
  std::vector<NamedGraph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t v = vdist(rng);
    std::uniform_int_distribution<std::size_t> extra(1, v);
    out.push_back({"random#" + std::to_string(k) + "(v=" + std::to_string(v) + ")",
                   random_bridgeless_graph(v, extra(rng), rng)});
  }
  return out;
}

/// Unit-length family instances small enough for every dense check.
inline std::vector<NamedGraph> small_family_pool() {
  return {{"circle(5)", circle(5)},
          {"complete(5)", complete(5)},
          {"H(1,1)", hexagonal_torus({1, 1})},
          {"H(2,1)", hexagonal_torus({2, 1})},
          {"H(2,2)", hexagonal_torus({2, 2})},
          {"MM(3,3)", mm_graph({3, 3})},
          {"TT(3,3,2)", tt_graph({3, 3, 2})}};
}

struct MethodAgreement {
  double fixed_point_spread = 0.0;   // max rel. deviation of tau(p) from tau(0) over all p
  double trace_vs_fixed = 0.0;
  std::optional<double> special_vs_trace;
  double max_deviation() const {
    return std::max({fixed_point_spread, trace_vs_fixed, special_vs_trace.value_or(0.0)});
  }
  TauResult trace;
};

/// Runs every applicable dense route on g (adequated) and reports the relative spreads.
inline MethodAgreement method_agreement(const MetrizedGraph& g, bool all_bases = true) {
  const Analysis an = analyze(g);
  const MetrizedGraph& ag = an.graph();
  MethodAgreement out;
  const TauResult base = tau_fixed_point(ag, an.pinv, 0);
  if (all_bases) {
    for (VertexId p = 1; p < ag.vertex_count(); ++p) {
      out.fixed_point_spread =
          std::max(out.fixed_point_spread, relative_difference(tau_fixed_point(ag, an.pinv, p).tau, base.tau));
    }
  }
  out.trace = tau_trace(ag, an.pinv);
  out.trace_vs_fixed = relative_difference(out.trace.tau, base.tau);
  if (check_special_conditions(ag, an.pinv).all()) {
    out.special_vs_trace = relative_difference(tau_special(ag, an.pinv).tau, out.trace.tau);
  }
  out.trace.diagnostics.base_vertex_spread = out.fixed_point_spread;
  return out;
}

struct InvariantResiduals {
  double genus = 0.0;          // |sum L/(L+R) - g|
  double subdivision = 0.0;    // relative
  double scale = 0.0;          // relative, factor 2.5
  double additivity = 0.0;     // absolute, wedge with a unit triangle
  std::optional<double> bridgeless_excess;  // tau - l/12 (bridgeless only)
  double resistance_floor_excess = 0.0;     // (1/4) max r - tau
};

/// The criterion-style invariants on one graph; rng drives the subdivided edge and t.
inline InvariantResiduals invariant_residuals(const MetrizedGraph& g, std::mt19937_64& rng) {
  InvariantResiduals out;
  const Analysis an = analyze(g);
  const MetrizedGraph& ag = an.graph();
  const TauResult t = tau_trace(ag, an.pinv);
  out.genus = std::abs(t.diagnostics.genus_residual);

  std::uniform_int_distribution<EdgeId> pick(0, ag.edge_count() - 1);
  std::uniform_real_distribution<double> frac(0.1, 0.9);
  const MetrizedGraph split = subdivide_edge(ag, pick(rng), frac(rng));
  out.subdivision = relative_difference(compute_tau(split).tau, t.tau);

  out.scale = relative_difference(compute_tau(scale(ag, 2.5)).tau, 2.5 * t.tau);

  const MetrizedGraph tri = circle(3);
  const MetrizedGraph joined = join_at_vertex(ag, 0, tri, 0);
  out.additivity = std::abs(compute_tau(joined).tau - (t.tau + 0.25));  // tau(C_3) = 3/12

  if (find_bridges(ag).empty()) out.bridgeless_excess = t.tau - ag.total_length() / 12.0;

  double rmax = 0.0;
  for (VertexId p = 0; p < ag.vertex_count(); ++p)
    for (VertexId q = p + 1; q < ag.vertex_count(); ++q) rmax = std::max(rmax, resistance(an.pinv, p, q));
  out.resistance_floor_excess = 0.25 * rmax - t.tau;
  return out;
}

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;

  std::size_t failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const CheckOutcome& c) { return !c.passed; }));
  }
  bool passed() const { return failures() == 0; }
  void add(std::string name, bool ok, std::string detail = {}) { checks.push_back({std::move(name), ok, std::move(detail)}); }
};

struct VerifyOptions {
  std::size_t n_max = 10;
  std::uint64_t seed = 1;
  std::size_t random_graphs = 10;
  std::size_t max_vertices = 30;
};

namespace detail {

inline std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

inline std::vector<NamedGraph> verify_pool(const VerifyOptions& o) {
  auto pool = random_bridgeless_pool(o.seed, o.random_graphs, o.max_vertices);
  for (auto& g : small_family_pool()) pool.push_back(std::move(g));
  return pool;
}

}  // namespace detail

inline SuiteReport verify_trig(const VerifyOptions& o) {
  SuiteReport r{"trig", {}};
  for (std::size_t n = 2; n <= std::min<std::size_t>(o.n_max, 10); ++n) {
    const TrigSumValue s = trig_sum(n);
    const double err = std::abs(s.value - s.known_rational->value());
    r.add("S(" + std::to_string(n) + ") = " + std::to_string(s.known_rational->num) + "/" +
              std::to_string(s.known_rational->den),
          err < 1e-9, "abs err " + detail::sci(err));
  }
  for (std::size_t n = 2; n <= o.n_max; ++n) {
    const CscCotResiduals c = csc_cot_identities(n);
    r.add("csc/cot sums n=" + std::to_string(n), std::abs(c.csc) < 1e-9 && std::abs(c.cot) < 1e-9,
          "csc " + detail::sci(c.csc) + ", cot " + detail::sci(c.cot));
  }
  return r;
}

inline SuiteReport verify_bounds(const VerifyOptions& o) {
  SuiteReport r{"bounds", {}};
  for (std::size_t n = 3; n <= o.n_max; ++n) {
    const double t = tau_hex_closed(n);
    const Interval b = tau_hex_bounds(n);
    r.add("tau_hex_closed(" + std::to_string(n) + ") within bounds", b.contains(t),
          "slack " + detail::sci(t - b.lower) + " / " + detail::sci(b.upper - t));
  }
  for (std::size_t n = 2; n <= o.n_max; ++n) {
    const double s = trig_sum(n).value;
    r.add("S(" + std::to_string(n) + ") within lemma bounds", trig_sum_bounds(n).contains(s, 1e-12));
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(o.n_max, 5); ++n) {
    const Analysis an = analyze(hexagonal_torus({n, n}));
    const double kf = kirchhoff_index(an.pinv);
    const Interval b = kirchhoff_hex_bounds(n);
    r.add("Kf(H(" + std::to_string(n) + "," + std::to_string(n) + ")) within bounds", b.contains(kf),
          "Kf " + std::to_string(kf));
  }
  for (const auto& ng : small_family_pool()) {
    const MetrizedGraph& g = ng.graph;
    if (!g.is_adequate()) continue;
    const StructureReport s = structure_report(g);
    if (!s.is_cubic || s.edge_connectivity != std::size_t{3}) continue;
    const MetrizedGraph gn = normalize(g);
    const TauBoundsReport b = tau_bounds_check(gn, compute_tau(gn));
    r.add(ng.name + " regular bounds", b.upper_holds && b.lower_holds && b.cubic_lower_holds.value_or(true),
          "tau " + std::to_string(b.normalized_tau));
  }
  return r;
}

inline SuiteReport verify_genus(const VerifyOptions& o) {
  SuiteReport r{"genus", {}};
  for (const auto& ng : detail::verify_pool(o)) {
    const TauResult t = compute_tau(ng.graph);
    const double res = std::abs(t.diagnostics.genus_residual);
    r.add(ng.name, res < 1e-9, "residual " + detail::sci(res));
  }
  return r;
}

inline SuiteReport verify_methods(const VerifyOptions& o) {
  SuiteReport r{"methods", {}};
  for (const auto& ng : detail::verify_pool(o)) {
    const MethodAgreement m = method_agreement(ng.graph);
    r.add(ng.name, m.max_deviation() < 1e-9,
          "max rel dev " + detail::sci(m.max_deviation()) + (m.special_vs_trace ? " (incl. special)" : ""));
  }
  return r;
}

inline SuiteReport verify_subdivision(const VerifyOptions& o) {
  SuiteReport r{"subdivision", {}};
  std::mt19937_64 rng(o.seed);
  for (const auto& ng : detail::verify_pool(o)) {
    const MetrizedGraph g = make_adequate(ng.graph);
    const double base = compute_tau(g).tau;
    std::uniform_int_distribution<EdgeId> pick(0, g.edge_count() - 1);
    std::uniform_real_distribution<double> frac(0.05, 0.95);
    const double after = compute_tau(subdivide_edge(g, pick(rng), frac(rng))).tau;
    const double d = relative_difference(after, base);
    r.add(ng.name, d < 1e-10, "rel diff " + detail::sci(d));
  }
  return r;
}

inline SuiteReport verify_spectrum(const VerifyOptions& o) {
  SuiteReport r{"spectrum", {}};
  for (std::size_t n = 1; n <= o.n_max; ++n) {
    for (std::size_t m = 1; m <= n; ++m) {
      const std::size_t v = 2 * (n + 1) * (m + 1);
      if (v > 400) continue;
      const Eigen::VectorXd num = laplacian_spectrum(DiscreteLaplacian(hexagonal_torus({n, m})));
      const HexSpectrum an = hex_eigenvalues(n, m);
      double worst = 0.0;
      for (std::size_t k = 0; k < an.eigenvalues.size(); ++k) {
        worst = std::max(worst, std::abs(an.eigenvalues[k] - num(static_cast<Eigen::Index>(k))));
      }
      const double pair = hex_pair_sum_residual(n, m);
      r.add("H(" + std::to_string(n) + "," + std::to_string(m) + ")", worst < 1e-8 && pair < 1e-10,
            "eig " + detail::sci(worst) + ", pair " + detail::sci(pair));
    }
  }
  return r;
}

inline const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"trig", "bounds", "genus", "methods", "subdivision", "spectrum"};
  return names;
}

inline SuiteReport run_verify_suite(const std::string& name, const VerifyOptions& o) {
  if (name == "trig") return verify_trig(o);
  if (name == "bounds") return verify_bounds(o);
  if (name == "genus") return verify_genus(o);
  if (name == "methods") return verify_methods(o);
  if (name == "subdivision") return verify_subdivision(o);
  if (name == "spectrum") return verify_spectrum(o);
  throw Error(ErrorCode::ParameterOutOfRange, "unknown suite '" + name + "'");
}

}  // namespace taugraph
