#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "taugraph/graph.hpp"

namespace taugraph {

/// Edge ids of all bridges, ascending. Linear-time lowpoint DFS over edge ids, so
/// parallel edges are never bridges and self-loops are skipped.
inline std::vector<EdgeId> find_bridges(const MetrizedGraph& g) {
  const std::size_t v = g.vertex_count();
  const auto adj = g.incidence();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> disc(v, kUnseen), low(v, 0);
  std::vector<EdgeId> bridges;

  struct Frame {
    VertexId vertex;
    EdgeId parent_edge;
    std::size_t next;
  };
  std::size_t clock = 0;
  for (VertexId root = 0; root < v; ++root) {
    if (disc[root] != kUnseen) continue;
    std::vector<Frame> stack{{root, kUnseen, 0}};
    disc[root] = low[root] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < adj[f.vertex].size()) {
        const Incidence inc = adj[f.vertex][f.next++];
        if (inc.edge == f.parent_edge || inc.neighbor == f.vertex) continue;
        if (disc[inc.neighbor] == kUnseen) {
          disc[inc.neighbor] = low[inc.neighbor] = clock++;
          stack.push_back({inc.neighbor, inc.edge, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], disc[inc.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId parent = stack.back().vertex;
        low[parent] = std::min(low[parent], low[done.vertex]);
        if (low[done.vertex] > disc[parent]) bridges.push_back(done.parent_edge);
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

/// Global minimum cut with unit capacity per edge (Stoer-Wagner, heap variant).
/// Self-loops carry no capacity. Returns 0 for a disconnected graph.
inline std::size_t edge_connectivity(const MetrizedGraph& g) {
  const std::size_t v = g.vertex_count();
  if (v <= 1) return 0;
  if (!g.is_connected()) return 0;

  // Merged super-vertices keep the original incidence lists; find() resolves them.
  std::vector<VertexId> rep(v);
  std::iota(rep.begin(), rep.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (rep[x] != x) x = rep[x] = rep[rep[x]];
    return x;
  };
  std::vector<std::vector<VertexId>> members(v);
  for (VertexId i = 0; i < v; ++i) members[i] = {i};
  const auto adj = g.incidence();

  std::vector<VertexId> alive(v);
  std::iota(alive.begin(), alive.end(), VertexId{0});
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<long long> key(v, 0);
  std::vector<char> in_a(v, 0);

  while (alive.size() > 1) {
    for (VertexId s : alive) {
      key[s] = 0;
      in_a[s] = 0;
    }
    using Entry = std::pair<long long, VertexId>;
    std::priority_queue<Entry> heap;
    for (VertexId s : alive) heap.push({0, s});
    VertexId prev = alive.front(), last = alive.front();
    std::size_t added = 0;
    long long last_key = 0;
    while (added < alive.size()) {
      const auto [k, s] = heap.top();
      heap.pop();
      if (in_a[s] || k != key[s]) continue;
      in_a[s] = 1;
      ++added;
      prev = last;
      last = s;
      last_key = k;
      for (VertexId m : members[s]) {
        for (const Incidence& inc : adj[m]) {
          const VertexId t = find(inc.neighbor);
          if (t == s || in_a[t]) continue;
          ++key[t];
          heap.push({key[t], t});
        }
      }
    }
    best = std::min(best, static_cast<std::size_t>(last_key));
    if (best == 0) break;
    // Merge last into prev.
    rep[last] = prev;
    auto& into = members[prev];
    into.insert(into.end(), members[last].begin(), members[last].end());
    members[last].clear();
    alive.erase(std::find(alive.begin(), alive.end(), last));
  }
  return best;
}

struct StructureReport {
  long long genus = 0;
  bool is_cubic = false;
  std::optional<std::size_t> regular_degree;
  std::vector<EdgeId> bridge_edge_ids;
  /// Empty when skipped (vertex count above the limit).
  std::optional<std::size_t> edge_connectivity;
  bool has_self_loops = false;
  bool has_multi_edges = false;
};

inline constexpr std::size_t kEdgeConnectivityLimit = 10'000;

inline StructureReport structure_report(const MetrizedGraph& g,
                                        std::size_t connectivity_limit = kEdgeConnectivityLimit) {
  if (!g.is_connected()) throw Error(ErrorCode::Disconnected, "structure_report needs a connected graph");
  StructureReport rep;
  rep.genus = g.genus();
  const auto deg = g.degrees();
  if (!deg.empty() && std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == deg.front(); })) {
    rep.regular_degree = deg.front();
  }
  rep.is_cubic = rep.regular_degree == std::size_t{3};
  rep.bridge_edge_ids = find_bridges(g);
  if (g.vertex_count() <= connectivity_limit) rep.edge_connectivity = edge_connectivity(g);
  rep.has_self_loops = g.has_self_loops();
  rep.has_multi_edges = g.has_multi_edges();
  return rep;
}

}  // namespace taugraph
