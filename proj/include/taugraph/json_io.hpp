#pragma once

#include <cmath>
#include <string>

#include <json.hpp>

#include "taugraph/structure.hpp"
#include "taugraph/tau.hpp"

namespace taugraph {

/// Flat result object: {tau, first_term, second_term, method, v, e, genus, normalized, diagnostics{...}}.
inline nlohmann::ordered_json to_json(const TauResult& r) {
  nlohmann::ordered_json diag;
  diag["genus_residual"] = r.diagnostics.genus_residual;
  diag["bridge_count"] = r.diagnostics.bridge_count;
  if (!r.diagnostics.special_conditions_report.empty()) {
    diag["special_conditions_report"] = r.diagnostics.special_conditions_report;
  }
  if (r.diagnostics.trace_ci_halfwidth) diag["tau_ci95_halfwidth"] = *r.diagnostics.trace_ci_halfwidth;
  if (r.diagnostics.base_vertex_spread) diag["base_vertex_spread"] = *r.diagnostics.base_vertex_spread;
  if (r.base_vertex) diag["base_vertex"] = *r.base_vertex;

  nlohmann::ordered_json j;
  j["tau"] = r.tau;
  j["first_term"] = r.first_term;
  j["second_term"] = r.second_term;
  j["method"] = to_string(r.method);
  j["v"] = r.vertex_count;
  j["e"] = r.edge_count;
  j["genus"] = r.genus;
  j["normalized"] = r.normalized();
  j["diagnostics"] = std::move(diag);
  return j;
}

inline nlohmann::ordered_json to_json(const StructureReport& s) {
  nlohmann::ordered_json j;
  j["genus"] = s.genus;
  j["is_cubic"] = s.is_cubic;
  j["regular_degree"] = s.regular_degree ? nlohmann::ordered_json(*s.regular_degree) : nlohmann::ordered_json();
  j["bridge_edge_ids"] = s.bridge_edge_ids;
  j["edge_connectivity"] =
      s.edge_connectivity ? nlohmann::ordered_json(*s.edge_connectivity) : nlohmann::ordered_json("skipped");
  j["has_self_loops"] = s.has_self_loops;
  j["has_multi_edges"] = s.has_multi_edges;
  return j;
}

}  // namespace taugraph
