#pragma once

// Reference computations written without the library, used as test oracles.

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

using Vec3 = std::array<double, 3>;

inline constexpr double kBenchmarkMatrix[3][3] = {{1, -2, 1}, {3, 1, 3}, {1, -2, 1}};

inline Vec3 matvec(const double (&a)[3][3], const Vec3& x) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i] += a[i][j] * x[j];
  return out;
}

inline double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

inline Vec3 project_unit_ball(const Vec3& v) {
  const double n = norm(v);
  if (n <= 1.0) return v;
  return {v[0] / n, v[1] / n, v[2] / n};
}

/// P(base - alpha / max{1,|A base|} A base) on the unit ball.
inline Vec3 forward_step_benchmark(const Vec3& base, double alpha) {
  const Vec3 u = matvec(kBenchmarkMatrix, base);
  const double s = alpha / std::max(1.0, norm(u));
  return project_unit_ball({base[0] - s * u[0], base[1] - s * u[1], base[2] - s * u[2]});
}

/// Simplex projection by bisection on the threshold theta in
/// sum max(v_i - theta, 0) = scale.
inline std::vector<double> project_simplex_bisection(const std::vector<double>& v, double scale) {
  double lo = *std::min_element(v.begin(), v.end()) - scale;
  double hi = *std::max_element(v.begin(), v.end());
  auto mass = [&](double theta) {
    double s = 0.0;
    for (double x : v) s += std::max(x - theta, 0.0);
    return s;
  };
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (mass(mid) > scale ? lo : hi) = mid;
  }
  const double theta = 0.5 * (lo + hi);
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
  return out;
}

/// gamma' = gamma^2 - 2.5 gamma + 1, gamma(0) = 0.625. Roots 0.5 and 2, so
/// (gamma - 2)/(gamma - 0.5) = -11 e^{1.5 t}.
inline double riccati_constant(double t) {
  const double r = -11.0 * std::exp(1.5 * t);
  return (2.0 - 0.5 * r) / (1.0 - r);
}

/// x'' + 2x' = 2(1 - x), x(0) = 2, x'(0) = 0.
inline double remark_closed_form(double t) { return 1.0 + std::exp(-t) * (std::cos(t) + std::sin(t)); }

}  // namespace oracle
