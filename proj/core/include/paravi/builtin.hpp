#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paravi/problem.hpp"
#include "paravi/schedule.hpp"

namespace paravi {

/// U(x) = A x with A = [[1,-2,1],[3,1,3],[1,-2,1]] on the unit ball of R^3.
/// The symmetric part of A is positive semidefinite and 0 is a solution.
ProblemInstance unit_ball_linear();
Matrix unit_ball_linear_matrix();

/// U(x) = x on the unit ball of R^d; 0 is the unique solution.
ProblemInstance identity_ball(Index dim = 3);

/// Omega = [1, 2] with U = 1, so the solution is 1 and every forward step
/// lands at 1. Paired with `remark_schedule()` and the fixed target y = 1 it
/// reproduces a second-order trajectory that leaves Omega.
ProblemInstance remark_instance();

/// alpha0 = 1, alpha1 = 2, delta = 2, lambda = 0. Violates the
/// feasible-damping condition.
ContinuousSchedule remark_schedule();

inline constexpr double kRemarkStart = 2.0;
inline constexpr double kRemarkTarget = 1.0;

/// Built-in ids accepted by the CLI.
inline constexpr std::string_view kBuiltinUnitBall = "paper-sec5";
inline constexpr std::string_view kBuiltinRemark = "remark-counterexample";
inline constexpr std::string_view kBuiltinIdentity = "identity-ball";

std::optional<ProblemInstance> builtin_problem(std::string_view id);
std::vector<std::string> builtin_ids();

}  // namespace paravi
