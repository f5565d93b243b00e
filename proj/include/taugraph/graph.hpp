#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "taugraph/error.hpp"
#include "taugraph/summation.hpp"

namespace taugraph {

using VertexId = std::size_t;
using EdgeId = std::size_t;

/// One edge of a metrized graph. The edge id is its position in the edge list.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;
  double length = 1.0;

  bool is_self_loop() const noexcept { return a == b; }
  VertexId other(VertexId x) const noexcept { return x == a ? b : a; }
};

/// Raw (a, b, length) triple as read from an edge-list file.
struct EdgeRecord {
  VertexId a = 0;
  VertexId b = 0;
  double length = 1.0;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Vertex-indexed multigraph with positive edge lengths. Immutable once built.
///
/// Self-loops and parallel edges are allowed; anything that needs a discrete
/// Laplacian goes through make_adequate() first. Vertex ids are dense and 0-based.
class MetrizedGraph {
 public:
  MetrizedGraph() = default;

  MetrizedGraph(std::size_t vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {})
      : vertex_count_(vertex_count), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (vertex_count_ == 0) {
      throw Error(ErrorCode::EmptyGraph, "graph needs at least one vertex");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (!std::isfinite(e.length) || e.length <= 0.0) {
        throw Error(ErrorCode::NonPositiveLength, "edge " + std::to_string(i) + " has length " + std::to_string(e.length));
      }
      if (e.a >= vertex_count_ || e.b >= vertex_count_) {
        throw Error(ErrorCode::IndexOutOfRange, "edge " + std::to_string(i) + " has an endpoint outside [0, v)");
      }
    }
    if (!labels_.empty() && labels_.size() != vertex_count_) {
      throw Error(ErrorCode::ParameterOutOfRange, "label count must match vertex count");
    }
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId id) const {
    if (id >= edges_.size()) throw Error(ErrorCode::BadEdgeId, "edge id " + std::to_string(id));
    return edges_[id];
  }
  std::span<const std::string> labels() const noexcept { return labels_; }

  double total_length() const {
    CompensatedSum s;
    for (const Edge& e : edges_) s.add(e.length);
    return s.value();
  }

  /// First Betti number e - v + 1 (of the graph as given, connected or not).
  long long genus() const noexcept {
    return static_cast<long long>(edges_.size()) - static_cast<long long>(vertex_count_) + 1;
  }

  std::vector<std::vector<Incidence>> incidence() const {
    std::vector<std::vector<Incidence>> adj(vertex_count_);
    for (EdgeId i = 0; i < edges_.size(); ++i) {
      adj[edges_[i].a].push_back({edges_[i].b, i});
      if (!edges_[i].is_self_loop()) adj[edges_[i].b].push_back({edges_[i].a, i});
    }
    return adj;
  }

  /// Valence of each vertex; a self-loop counts twice.
  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(vertex_count_, 0);
    for (const Edge& e : edges_) {
      ++d[e.a];
      ++d[e.b];
    }
    return d;
  }

  bool is_connected() const {
    std::vector<VertexId> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), VertexId{0});
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::size_t components = vertex_count_;
    for (const Edge& e : edges_) {
      const VertexId ra = find(e.a), rb = find(e.b);
      if (ra != rb) {
        parent[ra] = rb;
        --components;
      }
    }
    return components == 1;
  }

  bool has_self_loops() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_self_loop(); });
  }

  bool has_multi_edges() const {
    std::vector<std::pair<VertexId, VertexId>> keys;
    keys.reserve(edges_.size());
    for (const Edge& e : edges_) {
      if (!e.is_self_loop()) keys.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    }
    std::sort(keys.begin(), keys.end());
    return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
  }

  /// No self-loops and no parallel edges, so the discrete Laplacian is well defined.
  bool is_adequate() const { return !has_self_loops() && !has_multi_edges(); }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

/// Builds a connected graph from raw records; v is inferred as max index + 1.
inline MetrizedGraph from_edge_list(std::span<const EdgeRecord> records) {
  if (records.empty()) throw Error(ErrorCode::EmptyGraph, "edge list is empty");
  VertexId max_index = 0;
  std::vector<Edge> edges;
  edges.reserve(records.size());
  for (const EdgeRecord& r : records) {
    max_index = std::max({max_index, r.a, r.b});
    edges.push_back({r.a, r.b, r.length});
  }
  MetrizedGraph g(max_index + 1, std::move(edges));
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "edge list does not describe a connected graph");
  return g;
}

/// Multiplies every edge length by factor > 0.
inline MetrizedGraph scale(const MetrizedGraph& g, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::NonPositiveLength, "scale factor must be positive");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.length *= factor;
  return MetrizedGraph(g.vertex_count(), std::move(edges), {g.labels().begin(), g.labels().end()});
}

/// Rescales lengths so the total length is 1.
inline MetrizedGraph normalize(const MetrizedGraph& g) {
  const double total = g.total_length();
  if (!(total > 0.0)) throw Error(ErrorCode::NonPositiveLength, "cannot normalize a graph of zero total length");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.length /= total;
  return MetrizedGraph(g.vertex_count(), std::move(edges), {g.labels().begin(), g.labels().end()});
}

/// Splits edge `id` at fraction t into pieces tL (a side) and (1-t)L (b side).
/// The new valence-2 vertex gets index v; the a-side piece keeps the edge id and the
/// b-side piece is appended.
inline MetrizedGraph subdivide_edge(const MetrizedGraph& g, EdgeId id, double t) {
  if (id >= g.edge_count()) throw Error(ErrorCode::BadEdgeId, "edge id " + std::to_string(id));
  if (!(t > 0.0 && t < 1.0)) throw Error(ErrorCode::TOutOfRange, "t must lie in (0,1)");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const Edge old = edges[id];
  const VertexId mid = g.vertex_count();
  const double first = t * old.length;
  edges[id] = {old.a, mid, first};
  edges.push_back({mid, old.b, old.length - first});
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  if (!labels.empty()) labels.push_back("s" + std::to_string(id));
  return MetrizedGraph(g.vertex_count() + 1, std::move(edges), std::move(labels));
}

/// Removes self-loops and parallel edges by inserting valence-2 vertices.
///
/// A self-loop gets points at 1/3 and 2/3 of its length (a triangle); each parallel
/// edge after the first between a pair gets its midpoint. Original vertices keep
/// their indices, new ones are appended, total length is preserved. Graphs that are
/// already adequate come back unchanged.
inline MetrizedGraph make_adequate(const MetrizedGraph& g) {
  if (g.is_adequate()) return g;
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Edge> appended;
  std::vector<std::string> labels(g.labels().begin(), g.labels().end());
  std::size_t v = g.vertex_count();
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId id = 0; id < edges.size(); ++id) {
    const Edge e = edges[id];
    if (e.is_self_loop()) {
      const double first = e.length / 3.0;
      const double rest = e.length - first;
      const double second = 0.5 * rest;
      const VertexId m1 = v++, m2 = v++;
      edges[id] = {e.a, m1, first};
      appended.push_back({m1, m2, second});
      appended.push_back({m2, e.a, rest - second});
      if (!labels.empty()) {
        labels.push_back("s" + std::to_string(id) + "a");
        labels.push_back("s" + std::to_string(id) + "b");
      }
      continue;
    }
    if (!seen.emplace(std::min(e.a, e.b), std::max(e.a, e.b)).second) {
      const VertexId mid = v++;
      const double first = 0.5 * e.length;
      edges[id] = {e.a, mid, first};
      appended.push_back({mid, e.b, e.length - first});
      if (!labels.empty()) labels.push_back("s" + std::to_string(id));
    }
  }
  edges.insert(edges.end(), appended.begin(), appended.end());
  return MetrizedGraph(v, std::move(edges), std::move(labels));
}

/// Wedge sum: identifies vertex p1 of g1 with vertex p2 of g2.
/// g1 keeps its indices; g2's vertices other than p2 follow in order.
inline MetrizedGraph join_at_vertex(const MetrizedGraph& g1, VertexId p1, const MetrizedGraph& g2, VertexId p2) {
  if (p1 >= g1.vertex_count() || p2 >= g2.vertex_count()) {
    throw Error(ErrorCode::IndexOutOfRange, "join vertex out of range");
  }
  const std::size_t v1 = g1.vertex_count();
  auto remap = [&](VertexId x) -> VertexId {
    if (x == p2) return p1;
    return v1 + (x < p2 ? x : x - 1);
  };
  std::vector<Edge> edges(g1.edges().begin(), g1.edges().end());
  for (const Edge& e : g2.edges()) edges.push_back({remap(e.a), remap(e.b), e.length});
  return MetrizedGraph(v1 + g2.vertex_count() - 1, std::move(edges));
}

}  // namespace taugraph
