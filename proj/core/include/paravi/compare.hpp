#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paravi/discrete.hpp"
#include "paravi/problem.hpp"
#include "paravi/schedule.hpp"

namespace paravi {

enum class MethodKind { Inertial, Direct };

struct MethodConfig {
  std::string method_id;
  std::string schedule_id;
  MethodKind kind = MethodKind::Inertial;
  /// Required for Inertial.
  std::optional<DiscreteSchedule> schedule;
  /// Used by Direct.
  double tau = 0.75;
  Point z0;
  /// Second starting point of Inertial; defaults to z0.
  std::optional<Point> z1;
  RecordPolicy record;
  bool allow_inadmissible = false;
};

struct ComparisonRow {
  std::string method;
  std::string schedule;
  /// Empty when the tolerance was not reached.
  std::optional<std::int64_t> iters_to_tol;
  double final_residual = 0.0;
  double wall_ms = 0.0;
  /// Set when the run threw; the other fields are then meaningless.
  std::optional<std::string> error;
  std::optional<RunResult> run;
};

struct ComparisonTable {
  StopRule stop;
  std::vector<ComparisonRow> rows;
};

/// Runs every configuration with the same stop rule, concurrently when asked.
/// Rows keep the order of `configs`. Errors are recorded per row.
ComparisonTable compare_methods(const ProblemInstance& prob, const std::vector<MethodConfig>& configs,
                                const StopRule& stop, bool concurrent = true);

}  // namespace paravi
