#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "paravi/continuous.hpp"
#include "paravi/discrete.hpp"

namespace paravi {

struct ComparisonTable;

// CSV writers. Floating-point fields use 17 significant digits, so values
// round-trip exactly. Empty inputs give a header-only file.

/// t,x_1..x_d,residual,feas_violation,speed
std::string trajectory_csv(const ContinuousTrajectory& traj);
/// n,z_1..z_d,residual,feas_violation,step_norm
std::string run_csv(const RunResult& run);
/// method,schedule,iters_to_tol,final_residual,wall_ms
std::string comparison_csv(const ComparisonTable& table);

void write_csv(const ContinuousTrajectory& traj, const std::filesystem::path& path);
void write_csv(const RunResult& run, const std::filesystem::path& path);
void write_csv(const ComparisonTable& table, const std::filesystem::path& path);

/// Writes `text` to `path`, creating parent directories. IoError names the path.
void write_text(const std::filesystem::path& path, const std::string& text);

/// Outcome of one run as stored in the summary JSON.
struct RunSummary {
  std::string algorithm;
  /// "tol", "max_iters", "stagnation" for discrete runs; "t_end" for
  /// continuous ones.
  std::string stop_reason;
  std::int64_t iterations = 0;
  double final_residual = 0.0;
  std::vector<double> final_point;
  std::vector<std::string> warnings;
  /// JSON text echoing the run configuration. Compared as parsed JSON.
  std::string config_json = "{}";

  friend bool operator==(const RunSummary& a, const RunSummary& b);
};

RunSummary summarize(const RunResult& run, std::string config_json = "{}");
RunSummary summarize(const ContinuousTrajectory& traj, std::string config_json = "{}");

std::string summary_to_json(const RunSummary& s);
RunSummary summary_from_json(const std::string& text);
void write_summary_json(const RunSummary& s, const std::filesystem::path& path);
RunSummary read_summary_json(const std::filesystem::path& path);

/// printf-style "%.17g".
std::string format_real(double v);

}  // namespace paravi
