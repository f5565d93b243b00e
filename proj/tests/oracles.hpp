#pragma once

// Reference computations that share no code with the library: dense Gaussian
// elimination on grounded conductance systems, plain loops, long double.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct E {
  std::size_t a, b;
  double len;
};

/// r(x, p) for every vertex x, by grounding p and solving the reduced Kirchhoff system.
/// Parallel edges add conductances; self-loops drop out.
inline std::vector<long double> resistances_to(std::size_t v, const std::vector<E>& edges, std::size_t p) {
  std::vector<std::vector<long double>> k(v, std::vector<long double>(v, 0.0L));
  for (const E& e : edges) {
    if (e.a == e.b) continue;
    const long double c = 1.0L / e.len;
    k[e.a][e.a] += c;
    k[e.b][e.b] += c;
    k[e.a][e.b] -= c;
    k[e.b][e.a] -= c;
  }
  // Unit current injected at x, grounded at p: r(x,p) = potential at x. Invert the
  // reduced matrix column by column via one elimination with all right-hand sides.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < v; ++i)
    if (i != p) keep.push_back(i);
  const std::size_t n = keep.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(2 * n, 0.0L));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = k[keep[i]][keep[j]];
    m[i][n + i] = 1.0L;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < 1e-300L) throw std::runtime_error("oracle: singular grounded system");
    std::swap(m[piv], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const long double f = m[r][col] / m[col][col];
      if (f == 0.0L) continue;
      for (std::size_t c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<long double> out(v, 0.0L);
  for (std::size_t i = 0; i < n; ++i) out[keep[i]] = m[i][n + i] / m[i][i];
  return out;
}

inline long double resistance(std::size_t v, const std::vector<E>& edges, std::size_t x, std::size_t y) {
  if (x == y) return 0.0L;
  return resistances_to(v, edges, y)[x];
}

/// tau = (1/4) sum_edges integral of (d/dx r(x,p))^2. r(., p) is quadratic along an
/// edge, so its values at both ends and the midpoint pin down the integral exactly.
inline long double tau(std::size_t v, const std::vector<E>& edges, std::size_t p = 0) {
  const auto base = resistances_to(v, edges, p);
  long double total = 0.0L;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const E& e = edges[i];
    std::vector<E> split = edges;
    split[i] = {e.a, v, e.len / 2};
    split.push_back({v, e.b, e.len / 2});
    const long double rm = resistances_to(v + 1, split, p)[v];
    const long double d1 = base[e.b] - base[e.a];
    const long double dm = rm - base[e.a];
    const long double c = 2.0L * d1 - 4.0L * dm;
    const long double b = d1 - c;
    total += (b * b + 2.0L * b * c + 4.0L * c * c / 3.0L) / e.len;
  }
  return total / 4.0L;
}

inline long double total_length(const std::vector<E>& edges) {
  long double s = 0.0L;
  for (const E& e : edges) s += e.len;
  return s;
}

/// Sum of all ordered-pair resistances / 2.
inline long double kirchhoff(std::size_t v, const std::vector<E>& edges) {
  long double s = 0.0L;
  for (std::size_t q = 0; q < v; ++q) {
    const auto r = resistances_to(v, edges, q);
    for (std::size_t p = 0; p < v; ++p) s += r[p];
  }
  return s / 2.0L;
}

}  // namespace oracle
