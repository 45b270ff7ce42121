#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paravi/problem.hpp"
#include "paravi/schedule.hpp"
#include "paravi/types.hpp"

namespace paravi {

enum class StepMethod { Rk4, Euler };
enum class VelocityMode { QuarterConvention, Explicit };

std::string_view to_string(StepMethod m) noexcept;
std::string_view to_string(VelocityMode m) noexcept;

struct IntegratorConfig {
  double step = 1e-3;
  double t_end = 10.0;
  StepMethod method = StepMethod::Rk4;
  std::size_t record_every = 1;
  /// Replaces the smoothing point y(t) by a constant. Used for the
  /// constant-target variant of the flow.
  std::optional<Point> fixed_target;
};

struct SecondOrderState {
  double t;
  Point x;
  Point v;
};

struct CoupledState {
  double t;
  Point x;
  Point u;
  double gamma;
};

struct ContinuousSample {
  double t;
  Point x;
  /// v for second-order runs, u for coupled runs, empty for first-order runs.
  Point aux;
  /// NaN unless the run carries a Riccati solution.
  double gamma;
  double residual;
  double feas_violation;
  /// |x'|: |v|, gamma |u - x|, or |delta (P(...) - x)|.
  double speed;
};

struct ContinuousTrajectory {
  std::string kind;
  Index dimension = 0;
  /// Step actually taken (smaller than the requested one after subdivision).
  double step_used = 0.0;
  std::vector<ContinuousSample> samples;
  std::vector<std::string> warnings;

  double max_feas_violation() const;
};

/// x'(t0) = alpha1(t0)/4 (x1 - x0).
Point quarter_velocity(const ContinuousSchedule& sched, const Point& x0, const Point& x1);

/// normalized_forward_step(prob, x + lambda(t) v, alpha0(t)).
Point smoothing_point(const ProblemInstance& prob, const ContinuousSchedule& sched, double t, const Point& x,
                      const Point& v);

struct SecondOrderRhs {
  Point dx;
  Point dv;
};

/// dx = v, dv = -alpha1(t) v + delta(t) (y - x). `target` overrides y.
SecondOrderRhs rhs_second_order(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                const SecondOrderState& state, const std::optional<Point>& target = std::nullopt);

/// Fixed-step integration of x'' + alpha1 x' = delta (y - x) from x0 with the
/// quarter-convention velocity built from x1. Feasibility is recorded, not
/// enforced. Throws DivergenceError when the state stops being finite.
ContinuousTrajectory integrate_second_order(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                            const Point& x0, const Point& x1, const IntegratorConfig& cfg);

/// Same flow started from an explicit velocity.
ContinuousTrajectory integrate_second_order_velocity(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                                     const Point& x0, const Point& v0, const IntegratorConfig& cfg);

/// RK4 solution of gamma' + alpha1 gamma = gamma^2 + delta, gamma(t0) = alpha1(t0)/4.
struct RiccatiTable {
  std::vector<double> t;
  std::vector<double> gamma;

  /// Linear interpolation, clamped to the table range.
  double at(double time) const;
};

inline constexpr std::string_view kRiccatiBounds = "0<gamma<alpha1/2";

/// Throws ConditionFailure if the feasible-damping condition fails on the
/// grid, or if gamma leaves (0, alpha1/2) at some grid point.
RiccatiTable integrate_riccati(const ContinuousSchedule& sched, double t0, double t_end, double step);

/// Explicit convex-combination scheme
///   x+ = x + h gamma (u - x),  u+ = u + h mu (y - u),  mu = delta / gamma,
/// with u(t0) = x1. The step is divided into equal substeps so that
/// h max(gamma, mu) <= 1 on the whole horizon; more than 1e6 substeps, or a
/// non-finite mu, is a ConfigurationError. When lambda > 0 the product
/// lambda gamma is monitored and the first excursion above 1 is a warning.
ContinuousTrajectory integrate_coupled_feasible(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                                const Point& x0, const Point& x1, const IntegratorConfig& cfg);

/// Euler scheme x+ = x + h delta (P(x - alpha/max{1,|U|} U(x)) - x) for the
/// first-order baseline. Throws ConfigurationError when h delta(t) > 1 on the
/// grid. `cfg.method` is ignored.
ContinuousTrajectory integrate_first_order_baseline(const ProblemInstance& prob, const FirstOrderSchedule& sched,
                                                    const Point& x0, const IntegratorConfig& cfg);

/// x(t) = 1 + e^-t (cos t + sin t), the scalar trajectory of the remark instance.
double counterexample_oracle(double t);
/// x'(t) = -2 e^-t sin t.
double counterexample_velocity(double t);

}  // namespace paravi
