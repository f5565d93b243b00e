#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "taugraph/graph.hpp"

namespace taugraph {

// Generators. All emit unit edge lengths (random helpers excepted) and a fixed,
// documented vertex numbering so that generated Laplacians are reproducible.

/// Cycle with n unit edges on vertices 0..n-1. n = 1 is a self-loop, n = 2 a
/// pair of parallel edges; both need adequation before a Laplacian is built.
inline MetrizedGraph circle(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::ParameterOutOfRange, "circle needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
  return MetrizedGraph(n, std::move(edges));
}

/// K_v with unit edges, edges listed as (i,j), i < j, lexicographically.
inline MetrizedGraph complete(std::size_t v) {
  if (v < 2) throw Error(ErrorCode::ParameterOutOfRange, "complete graph needs v >= 2");
  std::vector<Edge> edges;
  edges.reserve(v * (v - 1) / 2);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j) edges.push_back({i, j, 1.0});
  return MetrizedGraph(v, std::move(edges));
}

/// Path 0-1-...-edges with unit lengths.
inline MetrizedGraph path_graph(std::size_t edge_count) {
  if (edge_count == 0) throw Error(ErrorCode::ParameterOutOfRange, "path needs at least one edge");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < edge_count; ++i) edges.push_back({i, i + 1, 1.0});
  return MetrizedGraph(edge_count + 1, std::move(edges));
}

struct HexTorusSpec {
  std::size_t n = 0;
  std::size_t m = 0;
};

/// Hexagonal torus H(n,m): adjacency I_{n+1} (x) A(C_{2m+2}) + B_{n+1} (x) F_{2m+2} + transpose.
///
/// Vertex (I, t) with cycle block I in [0, n] and in-cycle position t in [0, 2m+1]
/// has index I*(2m+2) + t. Edges: the n+1 cycles first (t, t+1 mod 2m+2, block by
/// block), then one edge (I, 2s+1) -- (I+1 mod n+1, 2s) per block I and s in [0, m].
/// n = 0 or m = 0 yields parallel edges (adjacency entries of 2).
inline MetrizedGraph hexagonal_torus(HexTorusSpec spec) {
  const std::size_t blocks = spec.n + 1;
  const std::size_t len = 2 * spec.m + 2;
  auto id = [&](std::size_t block, std::size_t t) { return block * len + t % len; };
  std::vector<Edge> edges;
  edges.reserve(3 * blocks * (spec.m + 1));
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t t = 0; t < len; ++t) edges.push_back({id(b, t), id(b, t + 1), 1.0});
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t s = 0; s <= spec.m; ++s) edges.push_back({id(b, 2 * s + 1), id((b + 1) % blocks, 2 * s), 1.0});
  std::vector<std::string> labels;
  labels.reserve(blocks * len);
  for (std::size_t b = 0; b < blocks; ++b)
    for (std::size_t t = 0; t < len; ++t) labels.push_back(std::to_string(b) + "." + std::to_string(t));
  return MetrizedGraph(blocks * len, std::move(edges), std::move(labels));
}

struct MMSpec {
  std::size_t a = 3;
  std::size_t b = 3;
};

/// True when a, b > 2; the generator also accepts a == 2 or b == 2.
inline bool mm_in_standard_range(MMSpec spec) { return spec.a > 2 && spec.b > 2; }

/// MM(a,b): two circles A and B on ab vertices, a circles C_k on 2b vertices and
/// 2ab connecting edges. 1-based labels v1..v4ab; vertex v_i has index i-1:
///   A = v1..v_ab, B = v_{ab+1}..v_{2ab}, C_k = v_{2ab+2b(k-1)+1}..v_{2ab+2bk}.
/// For k in 1..a and j in 1..b the connecting edges are
///   (v_{2ab+2b(k-1)+2j-1}, v_{a(j-1)+k}) and (v_{2ab+2b(k-1)+2j}, v_{ab+a(j-1)+k}).
inline MetrizedGraph mm_graph(MMSpec spec) {
  const std::size_t a = spec.a, b = spec.b;
  if (a < 2 || b < 2) throw Error(ErrorCode::ParameterOutOfRange, "MM(a,b) needs a, b >= 2");
  const std::size_t ab = a * b;
  // 1-based label -> 0-based index
  auto v = [](std::size_t label) { return label - 1; };
  std::vector<Edge> edges;
  edges.reserve(6 * ab);
  for (std::size_t i = 1; i <= ab; ++i) edges.push_back({v(i), v(i % ab + 1), 1.0});
  for (std::size_t i = 1; i <= ab; ++i) edges.push_back({v(ab + i), v(ab + i % ab + 1), 1.0});
  for (std::size_t k = 1; k <= a; ++k) {
    const std::size_t base = 2 * ab + 2 * b * (k - 1);
    for (std::size_t t = 1; t <= 2 * b; ++t) edges.push_back({v(base + t), v(base + t % (2 * b) + 1), 1.0});
    for (std::size_t j = 1; j <= b; ++j) {
      edges.push_back({v(base + 2 * j - 1), v(a * (j - 1) + k), 1.0});
      edges.push_back({v(base + 2 * j), v(ab + a * (j - 1) + k), 1.0});
    }
  }
  std::vector<std::string> labels;
  labels.reserve(4 * ab);
  for (std::size_t i = 1; i <= 4 * ab; ++i) labels.push_back("v" + std::to_string(i));
  return MetrizedGraph(4 * ab, std::move(edges), std::move(labels));
}

struct TTSpec {
  std::size_t a = 1;
  std::size_t b = 1;
  std::size_t c = 2;
};

/// TT(a,b,c): 3-Cayley tree of depth a plus one chord per outer vertex.
///
/// Tree vertices are numbered breadth-first (root v1, its three children v2..v4,
/// then each vertex's two children in order), so the k = 3*2^(a-1) - 2 inner
/// vertices come first and the M = 3*2^(a-1) outer vertices are v_{k+1}..v_{k+M}.
/// Outer vertex v_{k+i} gets the chord to v_{k+i+b} for odd i and to v_{k+i+c-1}
/// for even i, offsets taken mod M with 0 read as M.
inline MetrizedGraph tt_graph(TTSpec spec) {
  const std::size_t a = spec.a;
  if (a < 1 || spec.b < 1 || spec.c < 1) throw Error(ErrorCode::ParameterOutOfRange, "TT(a,b,c) needs positive a, b, c");
  if (a > 24) throw Error(ErrorCode::ParameterOutOfRange, "TT depth a > 24 is not supported");
  if ((spec.b % 2) == (spec.c % 2)) throw Error(ErrorCode::ParityViolation, "b and c must have different parity");

  const std::size_t outer = 3 * (std::size_t{1} << (a - 1));
  const std::size_t inner = outer - 2;
  const std::size_t v = inner + outer;
  std::vector<Edge> edges;
  edges.reserve(v - 1 + outer);

  // Breadth-first tree: root has 3 children, every other inner vertex has 2.
  std::size_t next = 1;
  for (std::size_t x = 0; x < inner; ++x) {
    const std::size_t children = x == 0 ? 3 : 2;
    for (std::size_t c = 0; c < children; ++c) edges.push_back({x, next++, 1.0});
  }

  auto wrap = [&](std::size_t i) {
    const std::size_t r = i % outer;
    return r == 0 ? outer : r;
  };
  std::set<std::pair<std::size_t, std::size_t>> chords;
  for (std::size_t i = 1; i <= outer; ++i) {
    const std::size_t j = (i % 2 == 1) ? wrap(i + spec.b) : wrap(i + spec.c - 1);
    if (j == i) {
      throw Error(ErrorCode::DegenerateChord, "chord from outer vertex " + std::to_string(i) + " is a self-loop");
    }
    const std::size_t p = inner + i - 1, q = inner + j - 1;
    if (!chords.emplace(std::min(p, q), std::max(p, q)).second) {
      throw Error(ErrorCode::DegenerateChord, "chord between outer vertices " + std::to_string(i) + " and " +
                                                  std::to_string(j) + " is duplicated");
    }
    edges.push_back({p, q, 1.0});
  }
  std::vector<std::string> labels;
  labels.reserve(v);
  for (std::size_t i = 1; i <= v; ++i) labels.push_back("v" + std::to_string(i));
  return MetrizedGraph(v, std::move(edges), std::move(labels));
}

/// Closed-form counts for the family invariants.
inline std::size_t hex_vertex_count(HexTorusSpec s) { return 2 * (s.n + 1) * (s.m + 1); }
inline std::size_t hex_edge_count(HexTorusSpec s) { return 3 * (s.n + 1) * (s.m + 1); }
inline std::size_t tt_vertex_count(std::size_t a) { return 3 * (std::size_t{1} << a) - 2; }
inline std::size_t tt_edge_count(std::size_t a) { return 9 * (std::size_t{1} << (a - 1)) - 3; }

// Random helpers for property tests. Lengths are uniform in [min_len, max_len].

struct RandomLengths {
  double min_len = 0.5;
  double max_len = 2.0;
};

/// Random recursive tree: vertex i > 0 hangs off a uniform vertex j < i.
inline MetrizedGraph random_tree(std::size_t v, std::mt19937_64& rng, RandomLengths lengths = {}) {
  if (v < 2) throw Error(ErrorCode::ParameterOutOfRange, "random tree needs v >= 2");
  std::uniform_real_distribution<double> len(lengths.min_len, lengths.max_len);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < v; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const std::size_t j = pick(rng);
    edges.push_back({j, i, len(rng)});
  }
  return MetrizedGraph(v, std::move(edges));
}

/// Hamiltonian cycle through a random permutation plus `extra` distinct chords.
/// Connected, bridgeless, no self-loops or parallel edges.
inline MetrizedGraph random_bridgeless_graph(std::size_t v, std::size_t extra, std::mt19937_64& rng,
                                             RandomLengths lengths = {}) {
  if (v < 3) throw Error(ErrorCode::ParameterOutOfRange, "random bridgeless graph needs v >= 3");
  std::uniform_real_distribution<double> len(lengths.min_len, lengths.max_len);
  std::vector<std::size_t> order(v);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<std::size_t, std::size_t>> used;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < v; ++i) {
    const std::size_t p = order[i], q = order[(i + 1) % v];
    used.emplace(std::min(p, q), std::max(p, q));
    edges.push_back({p, q, len(rng)});
  }
  const std::size_t max_extra = v * (v - 1) / 2 - v;
  extra = std::min(extra, max_extra);
  std::uniform_int_distribution<std::size_t> pick(0, v - 1);
  while (extra > 0) {
    const std::size_t p = pick(rng), q = pick(rng);
    if (p == q || !used.emplace(std::min(p, q), std::max(p, q)).second) continue;
    edges.push_back({p, q, len(rng)});
    --extra;
  }
  return MetrizedGraph(v, std::move(edges));
}

/// Random tree plus `extra` random chords (bridges likely remain).
inline MetrizedGraph random_connected_graph(std::size_t v, std::size_t extra, std::mt19937_64& rng,
                                            RandomLengths lengths = {}) {
  const MetrizedGraph tree = random_tree(v, rng, lengths);
  std::vector<Edge> edges(tree.edges().begin(), tree.edges().end());
  std::set<std::pair<std::size_t, std::size_t>> used;
  for (const Edge& e : edges) used.emplace(std::min(e.a, e.b), std::max(e.a, e.b));
  std::uniform_real_distribution<double> len(lengths.min_len, lengths.max_len);
  std::uniform_int_distribution<std::size_t> pick(0, v - 1);
  extra = std::min(extra, v * (v - 1) / 2 - (v - 1));
  while (extra > 0) {
    const std::size_t p = pick(rng), q = pick(rng);
    if (p == q || !used.emplace(std::min(p, q), std::max(p, q)).second) continue;
    edges.push_back({p, q, len(rng)});
    --extra;
  }
  return MetrizedGraph(v, std::move(edges));
}

}  // namespace taugraph
