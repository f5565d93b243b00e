#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "taugraph/graph.hpp"
#include "taugraph/laplacian.hpp"
#include "taugraph/structure.hpp"
#include "taugraph/summation.hpp"

namespace taugraph {

enum class TauMethod { FixedPoint, Trace, Special, Analytic };

inline const char* to_string(TauMethod m) {
  switch (m) {
    case TauMethod::FixedPoint: return "fixed_point";
    case TauMethod::Trace: return "trace";
    case TauMethod::Special: return "special";
    case TauMethod::Analytic: return "analytic";
  }
  return "unknown";
}

/// Per-edge resistance data. R_i is the resistance between the endpoints in the
/// graph with edge i removed (+inf for a bridge).
struct EdgeResistanceData {
  EdgeId edge_id = 0;
  double length = 0.0;
  double endpoint_resistance = 0.0;
  double complement_resistance = 0.0;
  bool is_bridge = false;
};

struct TauDiagnostics {
  double genus_residual = 0.0;
  std::size_t bridge_count = 0;
  std::string special_conditions_report;
  /// Half-width of the 95% interval when tr(L+) was estimated stochastically.
  std::optional<double> trace_ci_halfwidth;
  /// Largest |tau(p) - tau(0)| over base vertices, when the caller swept them.
  std::optional<double> base_vertex_spread;
};

struct TauResult {
  double tau = 0.0;
  double first_term = 0.0;
  double second_term = 0.0;
  TauMethod method = TauMethod::FixedPoint;
  std::optional<VertexId> base_vertex;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  long long genus = 0;
  double total_length = 0.0;
  TauDiagnostics diagnostics;

  bool normalized() const noexcept { return std::abs(total_length - 1.0) <= 1e-12; }
};

namespace detail {

inline void require_matching(const MetrizedGraph& g, const PseudoInverse& lp) {
  if (!g.is_adequate()) throw Error(ErrorCode::PreconditionNotMet, "tau routines need an adequate graph");
  if (g.vertex_count() != lp.dimension()) {
    throw Error(ErrorCode::PreconditionNotMet, "pseudo-inverse dimension does not match the graph");
  }
}

inline TauResult make_result(const MetrizedGraph& g, TauMethod method, double first, double second) {
  TauResult r;
  r.first_term = first;
  r.second_term = second;
  r.tau = first + second;
  r.method = method;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.genus = g.genus();
  r.total_length = g.total_length();
  return r;
}

// (1/12) sum over non-bridges of L^3/(L+R)^2 = (L - r)^2 / L.
inline double first_term(const std::vector<EdgeResistanceData>& data) {
  CompensatedSum s;
  for (const auto& d : data) {
    if (d.is_bridge) continue;
    const double gap = d.length - d.endpoint_resistance;
    s.add(gap * gap / d.length);
  }
  return s.value() / 12.0;
}

}  // namespace detail

/// Builds per-edge data from measured endpoint resistances r(p_i,q_i), in edge order.
/// Bridges come from the combinatorial bridge finder; R_i = L r / (L - r) otherwise.
inline std::vector<EdgeResistanceData> edge_resistance_data(const MetrizedGraph& g,
                                                            const std::vector<double>& endpoint_resistance) {
  if (endpoint_resistance.size() != g.edge_count()) {
    throw Error(ErrorCode::PreconditionNotMet, "one endpoint resistance per edge is required");
  }
  const auto bridges = find_bridges(g);
  std::vector<EdgeResistanceData> out;
  out.reserve(g.edge_count());
  std::size_t next_bridge = 0;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    EdgeResistanceData d;
    d.edge_id = id;
    d.length = e.length;
    d.endpoint_resistance = endpoint_resistance[id];
    d.is_bridge = next_bridge < bridges.size() && bridges[next_bridge] == id;
    if (d.is_bridge) {
      ++next_bridge;
      d.complement_resistance = std::numeric_limits<double>::infinity();
    } else {
      const double r = d.endpoint_resistance;
      if (r >= e.length * (1.0 - 1e-9)) {
        throw Error(ErrorCode::NumericalInconsistency,
                    "edge " + std::to_string(id) + " is not a bridge but r(p,q) >= L within 1e-9");
      }
      d.complement_resistance = e.length * r / (e.length - r);
    }
    out.push_back(d);
  }
  return out;
}

inline std::vector<EdgeResistanceData> edge_resistance_data(const MetrizedGraph& g, const PseudoInverse& lp) {
  detail::require_matching(g, lp);
  std::vector<double> r;
  r.reserve(g.edge_count());
  for (const Edge& e : g.edges()) r.push_back(resistance(lp, e.a, e.b));
  return edge_resistance_data(g, r);
}

/// sum L_i/(L_i + R_i) - g, bridges contributing 0 to the sum.
inline double genus_identity_residual(const MetrizedGraph& g, const std::vector<EdgeResistanceData>& data) {
  CompensatedSum s;
  for (const auto& d : data) {
    if (!d.is_bridge) s.add(1.0 - d.endpoint_resistance / d.length);
  }
  return s.value() - static_cast<double>(g.genus());
}

/// Two-term tau formula with base vertex p. Second term uses
/// sum (r(p_i,p) - r(q_i,p))^2 / L_i; each bridge contributes L_i/4 to it.
inline TauResult tau_fixed_point(const MetrizedGraph& g, const PseudoInverse& lp, VertexId base = 0) {
  detail::require_matching(g, lp);
  detail::check_index(lp, base);
  const auto data = edge_resistance_data(g, lp);
  CompensatedSum second;
  std::size_t bridges = 0;
  for (const auto& d : data) {
    if (d.is_bridge) {
      second.add(d.length);
      ++bridges;
      continue;
    }
    const Edge& e = g.edges()[d.edge_id];
    const double diff = resistance(lp, e.a, base) - resistance(lp, e.b, base);
    second.add(diff * diff / d.length);
  }
  TauResult r = detail::make_result(g, TauMethod::FixedPoint, detail::first_term(data), 0.25 * second.value());
  r.base_vertex = base;
  r.diagnostics.bridge_count = bridges;
  r.diagnostics.genus_residual = genus_identity_residual(g, data);
  return r;
}

/// Trace route from its ingredients: diag(L+), tr(L+) and r(p_i,q_i) per edge.
inline TauResult tau_trace_from_parts(const MetrizedGraph& g, const std::vector<double>& diagonal, double trace,
                                      const std::vector<double>& endpoint_resistance) {
  if (diagonal.size() != g.vertex_count()) {
    throw Error(ErrorCode::PreconditionNotMet, "diagonal length does not match the graph");
  }
  const auto data = edge_resistance_data(g, endpoint_resistance);
  CompensatedSum positive;
  for (const Edge& e : g.edges()) {
    const double diff = diagonal[e.a] - diagonal[e.b];
    positive.add(diff * diff / e.length);
  }
  std::size_t bridges = 0;
  for (const auto& d : data) bridges += d.is_bridge ? 1 : 0;
  const double v = static_cast<double>(g.vertex_count());
  const double second = 0.25 * (4.0 / v * trace + positive.value());
  TauResult r = detail::make_result(g, TauMethod::Trace, detail::first_term(data), second);
  r.diagnostics.bridge_count = bridges;
  r.diagnostics.genus_residual = genus_identity_residual(g, data);
  return r;
}

/// Second term from the trace identity: (1/4)[(4/v) tr(L+) + sum_edges (l+_pp - l+_qq)^2 / L].
/// The identity covers bridges too, so no per-bridge special case is needed.
inline TauResult tau_trace(const MetrizedGraph& g, const PseudoInverse& lp) {
  detail::require_matching(g, lp);
  std::vector<double> diagonal(g.vertex_count());
  for (VertexId p = 0; p < g.vertex_count(); ++p) diagonal[p] = lp(p, p);
  std::vector<double> r;
  r.reserve(g.edge_count());
  for (const Edge& e : g.edges()) r.push_back(resistance(lp, e.a, e.b));
  return tau_trace_from_parts(g, diagonal, lp.trace(), r);
}

struct SpecialConditions {
  bool regular = false;
  std::size_t degree = 0;
  bool equal_lengths = false;
  bool simple = false;  // no self-loops, no parallel edges
  bool bridgeless = false;
  bool equal_endpoint_resistances = false;
  double resistance_spread = 0.0;  // (max - min)/max over edges

  bool all() const noexcept { return regular && equal_lengths && simple && bridgeless && equal_endpoint_resistances; }

  std::string report() const {
    std::string s;
    auto item = [&](const char* name, bool ok) {
      if (!s.empty()) s += "; ";
      s += name;
      s += ok ? "=ok" : "=FAILED";
    };
    item("regular", regular);
    item("equal_lengths", equal_lengths);
    item("no_self_loops_or_multi_edges", simple);
    item("bridgeless", bridgeless);
    item("equal_endpoint_resistances", equal_endpoint_resistances);
    return s;
  }
};

/// Structural checks plus measured r(p_i,q_i) equality within rel_tol.
inline SpecialConditions check_special_conditions(const MetrizedGraph& g, const PseudoInverse& lp,
                                                  double rel_tol = 1e-9) {
  SpecialConditions c;
  const auto deg = g.degrees();
  c.degree = deg.empty() ? 0 : deg.front();
  c.regular = !deg.empty() && std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == c.degree; });
  c.simple = g.is_adequate();
  double lmin = std::numeric_limits<double>::infinity(), lmax = 0.0;
  for (const Edge& e : g.edges()) {
    lmin = std::min(lmin, e.length);
    lmax = std::max(lmax, e.length);
  }
  c.equal_lengths = g.edge_count() > 0 && (lmax - lmin) <= 1e-12 * lmax;
  c.bridgeless = find_bridges(g).empty();
  if (g.vertex_count() == lp.dimension() && g.edge_count() > 0) {
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    for (const Edge& e : g.edges()) {
      const double r = resistance(lp, e.a, e.b);
      rmin = std::min(rmin, r);
      rmax = std::max(rmax, r);
    }
    c.resistance_spread = rmax > 0.0 ? (rmax - rmin) / rmax : 0.0;
    c.equal_endpoint_resistances = c.resistance_spread <= rel_tol;
  }
  return c;
}

/// Regular-graph formula on the normalized graph, rescaled by the total length:
/// tau/l = (1/12)(1 - 2(v-1)/(r v))^2 + tr(L+ of the normalized graph)/v.
inline TauResult tau_special_from_trace(const MetrizedGraph& g, std::size_t degree, double trace) {
  const double v = static_cast<double>(g.vertex_count());
  const double r = static_cast<double>(degree);
  const double total = g.total_length();
  const double f = 1.0 - 2.0 * (v - 1.0) / (r * v);
  // tr(L+) scales with lengths, so tr(L+_N)/v * total = trace / v.
  return detail::make_result(g, TauMethod::Special, total * f * f / 12.0, trace / v);
}

inline TauResult tau_special(const MetrizedGraph& g, const PseudoInverse& lp) {
  detail::require_matching(g, lp);
  const SpecialConditions c = check_special_conditions(g, lp);
  if (!c.all()) throw Error(ErrorCode::SpecialConditionsNotMet, c.report());
  TauResult r = tau_special_from_trace(g, c.degree, lp.trace());
  r.diagnostics.special_conditions_report = c.report();
  return r;
}

/// Predicted vs measured constants for an edge-symmetric regular graph, all on the
/// normalized scale (lengths divided by the total length).
struct SpecialStructureReport {
  std::size_t v = 0, e = 0, degree = 0;
  long long genus = 0;
  double predicted_length = 0.0;        // 1/e = 2/(r v)
  double predicted_complement = 0.0;    // (v-1)/(e g)
  double predicted_complement_regular = 0.0;  // 4(v-1)/(r(r-2)v^2 + 2 r v)
  double measured_length = 0.0;
  double measured_complement = 0.0;     // mean R_i
  // Residual = measured - predicted for each identity.
  double ratio_complement = 0.0;        // R/(L+R) - (v-1)/e
  double sum_parallel = 0.0;            // sum L R/(L+R) - (v-1)/e
  double sum_complement_sq = 0.0;       // sum L R^2/(L+R)^2 - ((v-1)/e)^2
  double ratio_length = 0.0;            // L/(L+R) - g/e
  double sum_length_sq = 0.0;           // sum L^2/(L+R) - g/e
  double sum_length_cubed = 0.0;        // sum L^3/(L+R)^2 - (g/e)^2
  double regular_form = 0.0;            // (g/e)^2 - (1 - 2(v-1)/(r v))^2
  std::optional<double> cubic_first_sum;  // sum L^3/(L+R)^2 - (1/9)(1+2/v)^2 when r = 3

  double max_abs_residual() const {
    double m = std::max({std::abs(measured_length - predicted_length),
                         std::abs(measured_complement - predicted_complement),
                         std::abs(predicted_complement - predicted_complement_regular), std::abs(ratio_complement),
                         std::abs(sum_parallel), std::abs(sum_complement_sq), std::abs(ratio_length),
                         std::abs(sum_length_sq), std::abs(sum_length_cubed), std::abs(regular_form)});
    if (cubic_first_sum) m = std::max(m, std::abs(*cubic_first_sum));
    return m;
  }
};

inline SpecialStructureReport special_structure_constants(const MetrizedGraph& g, const PseudoInverse& lp) {
  detail::require_matching(g, lp);
  const SpecialConditions c = check_special_conditions(g, lp);
  if (!c.all()) throw Error(ErrorCode::SpecialConditionsNotMet, c.report());
  const auto data = edge_resistance_data(g, lp);
  const double total = g.total_length();

  SpecialStructureReport rep;
  rep.v = g.vertex_count();
  rep.e = g.edge_count();
  rep.degree = c.degree;
  rep.genus = g.genus();
  const double v = static_cast<double>(rep.v), e = static_cast<double>(rep.e), gg = static_cast<double>(rep.genus);
  const double r = static_cast<double>(rep.degree);
  rep.predicted_length = 2.0 / (r * v);
  rep.predicted_complement = (v - 1.0) / (e * gg);
  rep.predicted_complement_regular = 4.0 * (v - 1.0) / (r * (r - 2.0) * v * v + 2.0 * r * v);

  CompensatedSum mean_r, parallel, comp_sq, len_sq, len_cubed;
  double ratio_c = 0.0, ratio_l = 0.0;
  for (const auto& d : data) {
    const double L = d.length / total;
    const double R = d.complement_resistance / total;
    mean_r.add(R);
    parallel.add(L * R / (L + R));
    comp_sq.add(L * R * R / ((L + R) * (L + R)));
    len_sq.add(L * L / (L + R));
    len_cubed.add(L * L * L / ((L + R) * (L + R)));
    ratio_c = std::max(ratio_c, std::abs(R / (L + R) - (v - 1.0) / e));
    ratio_l = std::max(ratio_l, std::abs(L / (L + R) - gg / e));
  }
  rep.measured_length = g.edges().front().length / total;
  rep.measured_complement = mean_r.value() / e;
  rep.ratio_complement = ratio_c;
  rep.sum_parallel = parallel.value() - (v - 1.0) / e;
  rep.sum_complement_sq = comp_sq.value() - std::pow((v - 1.0) / e, 2);
  rep.ratio_length = ratio_l;
  rep.sum_length_sq = len_sq.value() - gg / e;
  rep.sum_length_cubed = len_cubed.value() - std::pow(gg / e, 2);
  rep.regular_form = std::pow(gg / e, 2) - std::pow(1.0 - 2.0 * (v - 1.0) / (r * v), 2);
  if (rep.degree == 3) rep.cubic_first_sum = len_cubed.value() - std::pow(1.0 + 2.0 / v, 2) / 9.0;
  return rep;
}

/// Kf = v tr(L+) (half the sum of all pairwise resistances).
inline double kirchhoff_index(const PseudoInverse& lp) {
  return static_cast<double>(lp.dimension()) * lp.trace();
}

struct TauBoundsReport {
  std::size_t v = 0, degree = 0;
  double normalized_tau = 0.0;
  double upper = 0.0;
  double lower = 0.0;
  std::optional<double> cubic_lower;
  bool upper_holds = false;
  bool lower_holds = false;
  std::optional<bool> cubic_lower_holds;
  /// tau > l/108; a sanity flag only.
  bool above_conjectural_floor = false;
  double upper_slack = 0.0;  // upper - tau
  double lower_slack = 0.0;  // tau - lower
};

/// Bounds for r-regular (r >= 3) equal-length graphs with edge connectivity r,
/// evaluated on tau / total length.
inline TauBoundsReport tau_bounds_check(const MetrizedGraph& g, const TauResult& tau, double tol = 1e-12) {
  const StructureReport s = structure_report(g);
  if (!s.regular_degree || *s.regular_degree < 3) {
    throw Error(ErrorCode::PreconditionNotMet, "bounds need an r-regular graph with r >= 3");
  }
  double lmin = std::numeric_limits<double>::infinity(), lmax = 0.0;
  for (const Edge& e : g.edges()) {
    lmin = std::min(lmin, e.length);
    lmax = std::max(lmax, e.length);
  }
  if (lmax - lmin > 1e-12 * lmax) throw Error(ErrorCode::PreconditionNotMet, "bounds need equal edge lengths");
  if (!s.edge_connectivity) throw Error(ErrorCode::PreconditionNotMet, "edge connectivity was skipped");
  if (*s.edge_connectivity != *s.regular_degree) {
    throw Error(ErrorCode::PreconditionNotMet, "bounds need edge connectivity equal to the degree");
  }
  TauBoundsReport rep;
  rep.v = g.vertex_count();
  rep.degree = *s.regular_degree;
  const double v = static_cast<double>(rep.v), r = static_cast<double>(rep.degree);
  rep.normalized_tau = tau.tau / g.total_length();
  rep.upper = 1.0 / 12.0 - (v - 1.0) * (r - 2.0) / (3.0 * v * r * r);
  rep.lower = 1.0 / 12.0 - (v - 1.0) * ((r - 1.0) * v * v - 5.0 * v + 6.0) / (3.0 * r * r * v * v * v);
  rep.upper_holds = rep.normalized_tau <= rep.upper + tol;
  rep.lower_holds = rep.normalized_tau >= rep.lower - tol;
  rep.upper_slack = rep.upper - rep.normalized_tau;
  rep.lower_slack = rep.normalized_tau - rep.lower;
  if (rep.degree == 3) {
    rep.cubic_lower = 1.0 / 108.0 + (7.0 * v * v - 11.0 * v + 6.0) / (27.0 * v * v * v);
    rep.cubic_lower_holds = rep.normalized_tau >= *rep.cubic_lower - tol;
  }
  rep.above_conjectural_floor = rep.normalized_tau > 1.0 / 108.0;
  return rep;
}

/// Brute-force tau from (1/4) integral of (d/dx r(x,p))^2.
///
/// On every edge of the adequate graph, r(x,p) is sampled at mesh+1 equally spaced
/// points; interior points get their own temporary subdivision vertex and a fresh
/// dense pseudo-inverse. Secant slopes per cell are squared and summed with the
/// midpoint rule.
inline double tau_integral_oracle(const MetrizedGraph& graph, std::size_t mesh, VertexId base = 0,
                                  std::size_t max_vertices = 12) {
  if (mesh < 64) throw Error(ErrorCode::ParameterOutOfRange, "mesh must be at least 64");
  const MetrizedGraph g = make_adequate(graph);
  if (g.vertex_count() > max_vertices) {
    throw Error(ErrorCode::TooLarge, "integral oracle is limited to " + std::to_string(max_vertices) + " vertices");
  }
  const PseudoInverse lp = pseudo_inverse(DiscreteLaplacian(g));
  CompensatedSum integral;
  std::vector<double> samples(mesh + 1);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges()[id];
    samples.front() = resistance(lp, e.a, base);
    samples.back() = resistance(lp, e.b, base);
    for (std::size_t k = 1; k < mesh; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(mesh);
      const MetrizedGraph split = subdivide_edge(g, id, t);
      const PseudoInverse lp_split = pseudo_inverse(DiscreteLaplacian(split));
      samples[k] = resistance(lp_split, split.vertex_count() - 1, base);
    }
    const double h = e.length / static_cast<double>(mesh);
    for (std::size_t k = 0; k < mesh; ++k) {
      const double slope = (samples[k + 1] - samples[k]) / h;
      integral.add(slope * slope * h);
    }
  }
  return 0.25 * integral.value();
}

/// Convenience: adequate the graph, build L+ and evaluate the chosen route.
inline TauResult compute_tau(const MetrizedGraph& g, TauMethod method = TauMethod::Trace, VertexId base = 0,
                             PinvRoute route = PinvRoute::Dense) {
  const Analysis an = analyze(g, route);
  switch (method) {
    case TauMethod::FixedPoint: return tau_fixed_point(an.graph(), an.pinv, base);
    case TauMethod::Trace: return tau_trace(an.graph(), an.pinv);
    case TauMethod::Special: return tau_special(an.graph(), an.pinv);
    default: throw Error(ErrorCode::PreconditionNotMet, std::string("compute_tau does not handle method ") + to_string(method));
  }
}

}  // namespace taugraph
