#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <utility>
#include <vector>

#include "taugraph/error.hpp"
#include "taugraph/summation.hpp"
#include "taugraph/tau.hpp"

namespace taugraph {

namespace detail {

inline double hex_denominator(double theta, double phi) {
  const double a = std::sin(0.5 * theta), b = std::sin(0.5 * phi), c = std::sin(0.5 * (theta + phi));
  return 2.0 * (a * a + b * b + c * c);
}

/// |1 + e^{i theta} + e^{-i phi}| = sqrt(3 + 2cos theta + 2cos phi + 2cos(theta + phi)).
inline double hex_root(double theta, double phi) {
  return std::hypot(1.0 + std::cos(theta) + std::cos(phi), std::sin(theta) - std::sin(phi));
}

/// 3 - hex_root without cancellation: (9 - root^2) / (3 + root) = 2 denom / (3 + root).
inline double hex_lower_branch(double theta, double phi) {
  return 2.0 * hex_denominator(theta, phi) / (3.0 + hex_root(theta, phi));
}

inline double two_pi_over(std::size_t k) { return 2.0 * std::numbers::pi / static_cast<double>(k); }

}  // namespace detail

struct HexSpectrum {
  std::size_t n = 0, m = 0;
  /// Sorted ascending, 2(n+1)(m+1) values.
  std::vector<double> eigenvalues;
};

/// lambda_{i,j,k} = 3 + (-1)^k sqrt(3 + 2cos(2pi i/(n+1)) + 2cos(2pi j/(m+1)) + 2cos(sum)).
inline HexSpectrum hex_eigenvalues(std::size_t n, std::size_t m) {
  HexSpectrum s{n, m, {}};
  s.eigenvalues.reserve(2 * (n + 1) * (m + 1));
  const double ti = detail::two_pi_over(n + 1), tj = detail::two_pi_over(m + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      const double x = ti * static_cast<double>(i), y = tj * static_cast<double>(j);
      s.eigenvalues.push_back(3.0 + detail::hex_root(x, y));
      s.eigenvalues.push_back(i == 0 && j == 0 ? 0.0 : detail::hex_lower_branch(x, y));
    }
  }
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  return s;
}

/// max over (i,j) != (0,0) of |1/lambda_{i,j,0} + 1/lambda_{i,j,1} - 3/(3 - cos - cos - cos)|.
inline double hex_pair_sum_residual(std::size_t n, std::size_t m) {
  const double ti = detail::two_pi_over(n + 1), tj = detail::two_pi_over(m + 1);
  double worst = 0.0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      const double x = ti * static_cast<double>(i), y = tj * static_cast<double>(j);
      const double lhs = 1.0 / (3.0 + detail::hex_root(x, y)) + 1.0 / detail::hex_lower_branch(x, y);
      worst = std::max(worst, std::abs(lhs - 3.0 / detail::hex_denominator(x, y)));
    }
  }
  return worst;
}

/// tr(L+) of unit-length H(n,m): 1/6 + sum over (i,j) != (0,0) of 3/(3 - cos - cos - cos).
inline double hex_trace_pinv(std::size_t n, std::size_t m) {
  const double ti = detail::two_pi_over(n + 1), tj = detail::two_pi_over(m + 1);
  CompensatedSum s;
  s.add(1.0 / 6.0);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      s.add(3.0 / detail::hex_denominator(ti * static_cast<double>(i), tj * static_cast<double>(j)));
    }
  }
  return s.value();
}

/// Square case with the i = 0 and j = 0 rows collapsed: 1/6 + n(n+2)/2 + sum_{i,j=1..n}.
inline double hex_trace_pinv_square(std::size_t n) {
  const double t = detail::two_pi_over(n + 1);
  CompensatedSum s;
  s.add(1.0 / 6.0);
  s.add(0.5 * static_cast<double>(n) * static_cast<double>(n + 2));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) s.add(3.0 / detail::hex_denominator(t * static_cast<double>(i), t * static_cast<double>(j)));
  return s.value();
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Known values of the double cosine sum for n = 2..10.
inline constexpr std::array<Rational, 9> kTrigSumRationals{{
    {1, 4}, {10, 9}, {11, 4}, {58, 11}, {1577, 180}, {3812, 287}, {529, 28}, {419788, 16371}, {813957, 24244}}};

inline std::optional<Rational> known_trig_sum(std::size_t n) {
  if (n < 2 || n > 10) return std::nullopt;
  return kTrigSumRationals[n - 2];
}

struct TrigSumValue {
  std::size_t n = 0;
  double value = 0.0;
  std::optional<Rational> known_rational;
};

/// S(n) = sum_{i,j=1..n-1} 1/(3 - cos(2pi i/n) - cos(2pi j/n) - cos(2pi(i+j)/n)).
inline TrigSumValue trig_sum(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "trig_sum needs n >= 2");
  const double t = detail::two_pi_over(n);
  CompensatedSum s;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j) s.add(1.0 / detail::hex_denominator(t * static_cast<double>(i), t * static_cast<double>(j)));
  return {n, s.value(), known_trig_sum(n)};
}

struct CscCotResiduals {
  double csc = 0.0;  // sum csc^2(pi j/n) - (n^2-1)/3
  double cot = 0.0;  // sum cot^2(pi j/n) - (n-1)(n-2)/3
};

inline CscCotResiduals csc_cot_identities(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "csc_cot_identities needs n >= 2");
  CompensatedSum csc, cot;
  const double dn = static_cast<double>(n);
  for (std::size_t j = 1; j < n; ++j) {
    const double x = std::numbers::pi * static_cast<double>(j) / dn;
    const double s = std::sin(x);
    const double c = std::cos(x);
    csc.add(1.0 / (s * s));
    cot.add(c * c / (s * s));
  }
  return {csc.value() - (dn * dn - 1.0) / 3.0, cot.value() - (dn - 1.0) * (dn - 2.0) / 3.0};
}

/// tau(H^N(n-1,n-1)) = (n^4 + 11n^2 - 5)/(108 n^4) + S(n)/(2 n^4).
inline double tau_hex_closed(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "tau_hex_closed needs n >= 2");
  const double d = static_cast<double>(n);
  const double n2 = d * d, n4 = n2 * n2;
  return (n4 + 11.0 * n2 - 5.0) / (108.0 * n4) + trig_sum(n).value / (2.0 * n4);
}

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double x, double tol = 0.0) const { return x >= lower - tol && x <= upper + tol; }
};

/// Polynomial bounds on tau(H^N(n-1,n-1)).
inline Interval tau_hex_bounds(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "tau_hex_bounds needs n >= 2");
  const double d = static_cast<double>(n);
  const double n4 = d * d * d * d;
  return {(n4 + 20.0 * d * d - 18.0 * d + 4.0) / (108.0 * n4),
          (n4 + 9.0 * d * d * d + 2.0 * d * d - 9.0 * d + 4.0) / (108.0 * n4)};
}

/// (n-1)^2/6 <= S(n) <= (n+1)(n-1)^2/6.
inline Interval trig_sum_bounds(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "trig_sum_bounds needs n >= 2");
  const double d = static_cast<double>(n);
  return {(d - 1.0) * (d - 1.0) / 6.0, (d + 1.0) * (d - 1.0) * (d - 1.0) / 6.0};
}

/// Bounds on Kf of unit-length H(n,n).
inline Interval kirchhoff_hex_bounds(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "kirchhoff_hex_bounds needs n >= 2");
  const double d = static_cast<double>(n);
  const double sq = (d + 1.0) * (d + 1.0);
  return {2.0 * d * sq * (2.0 * d + 3.0) / 3.0 + sq / 3.0, d * sq * (d + 2.0) * (d + 3.0) / 3.0 + sq / 3.0};
}

/// Same argument with the factor 3 on the trig sum kept:
/// 2(n+1)^2 [1/6 + n(n+1)] <= Kf <= 2(n+1)^2 [1/6 + n(n+1)(n+2)/2].
inline Interval kirchhoff_hex_bounds_rederived(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "kirchhoff_hex_bounds_rederived needs n >= 2");
  const double d = static_cast<double>(n);
  const double twice_v = 2.0 * (d + 1.0) * (d + 1.0);
  return {twice_v * (1.0 / 6.0 + d * (d + 1.0)), twice_v * (1.0 / 6.0 + d * (d + 1.0) * (d + 2.0) / 2.0)};
}

/// (1/4pi^2) double integral of 3/(3 - cos x - cos y - cos(x+y)) over [0,2pi]^2.
///
/// Equal-weight midpoint grid with `resolution` cells per axis; the grid is offset by
/// half a cell so the singular point (0,0) is never sampled.
inline double lattice_integral(std::size_t resolution) {
  if (resolution < 64) throw Error(ErrorCode::ParameterOutOfRange, "lattice_integral needs resolution >= 64");
  const double h = detail::two_pi_over(resolution);
  std::vector<double> cx(resolution);
  for (std::size_t i = 0; i < resolution; ++i) cx[i] = (static_cast<double>(i) + 0.5) * h;
  CompensatedSum total;
  for (std::size_t i = 0; i < resolution; ++i) {
    CompensatedSum row;
    for (std::size_t j = 0; j < resolution; ++j) row.add(3.0 / detail::hex_denominator(cx[i], cx[j]));
    total.add(row.value());
  }
  const double cells = static_cast<double>(resolution) * static_cast<double>(resolution);
  return total.value() / cells;
}

inline constexpr double kLatticeIntegralConstant = 5.4661;

/// Large-n approximation (1/108)(1 + 1/n^2)^2 + 5.4661/(6 n^2).
inline double tau_hex_approx(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::ParameterOutOfRange, "tau_hex_approx needs n >= 2");
  const double d = static_cast<double>(n);
  const double f = 1.0 + 1.0 / (d * d);
  return f * f / 108.0 + kLatticeIntegralConstant / (6.0 * d * d);
}

/// Unit-length H(n,m) resistances across the three bond classes plus tr(L+).
///
/// Two-site unit cell with N = (n+1)(m+1) cells; Bloch phases theta = 2pi i/(n+1)
/// and phi = 2pi j/(m+1). Class 0 joins the two sites of a cell (in-cycle edge
/// (I,2s)-(I,2s+1)), class 1 is the in-cycle edge (I,2s-1)-(I,2s), class 2 the
/// cross edge (I-1,2s+1)-(I,2s).
struct HexResistances {
  std::size_t n = 0, m = 0;
  std::array<double, 3> bond{};
  double trace = 0.0;
  double diagonal = 0.0;  // l+_pp, identical for every vertex
};

inline HexResistances hex_edge_resistances(std::size_t n, std::size_t m) {
  const double ti = detail::two_pi_over(n + 1), tj = detail::two_pi_over(m + 1);
  const double cells = static_cast<double>((n + 1) * (m + 1));
  CompensatedSum diag, r0, r1, r2;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      const double x = ti * static_cast<double>(i), y = tj * static_cast<double>(j);
      const double denom = 2.0 * detail::hex_denominator(x, -y);  // 9 - |1 + e^{iy} + e^{ix}|^2
      diag.add(3.0 / denom);
      r0.add((3.0 - (1.0 + std::cos(y) + std::cos(x))) / denom);
      r1.add((3.0 - (1.0 + std::cos(y) + std::cos(y - x))) / denom);
      r2.add((3.0 - (1.0 + std::cos(x) + std::cos(x - y))) / denom);
    }
  }
  HexResistances out;
  out.n = n;
  out.m = m;
  out.diagonal = (1.0 / 12.0 + diag.value()) / cells;
  out.trace = 2.0 * cells * out.diagonal;
  out.bond = {2.0 / cells * (1.0 / 6.0 + r0.value()), 2.0 / cells * (1.0 / 6.0 + r1.value()),
              2.0 / cells * (1.0 / 6.0 + r2.value())};
  return out;
}

/// tau of the normalized H(n,m) from the Bloch sums (any n, m).
/// tau = (1/36) sum_d (1 - r_d)^2 + tr(L+)/(6 N^2) with unit-length r_d and tr.
inline TauResult tau_hex_analytic(std::size_t n, std::size_t m) {
  const HexResistances h = hex_edge_resistances(n, m);
  const double cells = static_cast<double>((n + 1) * (m + 1));
  CompensatedSum first;
  for (double r : h.bond) first.add((1.0 - r) * (1.0 - r));
  TauResult res;
  res.first_term = first.value() / 36.0;
  res.second_term = h.trace / (6.0 * cells * cells);
  res.tau = res.first_term + res.second_term;
  res.method = TauMethod::Analytic;
  res.vertex_count = 2 * (n + 1) * (m + 1);
  res.edge_count = 3 * (n + 1) * (m + 1);
  res.genus = static_cast<long long>(res.edge_count) - static_cast<long long>(res.vertex_count) + 1;
  res.total_length = 1.0;
  return res;
}

}  // namespace taugraph
