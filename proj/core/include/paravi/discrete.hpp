#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "paravi/problem.hpp"
#include "paravi/schedule.hpp"
#include "paravi/types.hpp"

namespace paravi {

/// (z(n-1), z(n)).
struct IterateWindow {
  std::int64_t n;
  Point z_prev;
  Point z_curr;
};

struct StopRule {
  /// Stop once the natural residual is <= this. Zero disables the test.
  double residual_tol = 1e-6;
  std::int64_t max_iters = 1'000'000;
  /// Stop after `stagnation_window` consecutive steps with |z(n)-z(n-1)|
  /// below this. Zero disables the test.
  double stagnation_tol = 0.0;
  std::int64_t stagnation_window = 1;
};

/// Every iterate is logged up to `dense_until`, then every `every`-th one.
/// The last iterate is always logged.
struct RecordPolicy {
  std::int64_t dense_until = 1000;
  std::int64_t every = 100;
};

struct RunOptions {
  StopRule stop;
  RecordPolicy record;
  /// Accept coefficients outside 1<=beta1<=beta1+xi<=2 or -1<=eta<=0. A
  /// warning is recorded instead of failing.
  bool allow_inadmissible = false;
};

enum class StopReason { Tolerance, MaxIterations, Stagnation };

std::string_view to_string(StopReason r) noexcept;

struct IterateRecord {
  std::int64_t n;
  Point z;
  double residual;
  double feas_violation;
  double step_norm;
};

struct RunResult {
  std::string algorithm;
  std::vector<IterateRecord> log;
  StopReason stop_reason = StopReason::MaxIterations;
  Point final;
  std::int64_t final_index = 0;
  double final_residual = 0.0;
  /// Largest membership violation over every iterate, logged or not.
  double max_feas_violation = 0.0;
  std::vector<std::string> warnings;
  Index dimension = 0;
};

/// normalized_forward_step(prob, z(n) + eta(n)(z(n) - z(n-1)), beta0(n)).
Point smoothing_point_discrete(const ProblemInstance& prob, const DiscreteSchedule& sched,
                               const IterateWindow& window);

/// (2 - beta1 - xi, beta1 - 1, xi) at n. They sum to one.
std::array<double, 3> inertial_coefficients(const DiscreteSchedule& sched, std::int64_t n);

/// z(n+1) = [2-beta1-xi] z(n) + [beta1-1] z(n-1) + xi w(n).
Point inertial_step(const ProblemInstance& prob, const DiscreteSchedule& sched, const IterateWindow& window);

/// Runs the inertial iteration from z(0) = z0, z(1) = z1. The residual stop
/// test starts at n = 1; `final_index` is the index of the last iterate.
/// Throws ConditionFailure at the first n with inadmissible coefficients
/// unless `allow_inadmissible` is set, and DivergenceError on a non-finite
/// iterate.
RunResult run_inertial(const ProblemInstance& prob, const DiscreteSchedule& sched, const Point& z0, const Point& z1,
                       const RunOptions& opts = {});

/// x(n+1) = P(x(n) - n^-tau / max{1,|U(x(n))|} U(x(n))) from x(1) = z0.
RunResult run_direct_method(const ProblemInstance& prob, double tau, const Point& z0, const RunOptions& opts = {});

}  // namespace paravi
