#include "paravi/compare.hpp"

#include <chrono>
#include <future>

#include "paravi/error.hpp"

namespace paravi {

namespace {

ComparisonRow run_one(const ProblemInstance& prob, const MethodConfig& cfg, const StopRule& stop) {
  ComparisonRow row;
  row.method = cfg.method_id;
  row.schedule = cfg.schedule_id;
  const auto start = std::chrono::steady_clock::now();
  try {
    RunOptions opts;
    opts.stop = stop;
    opts.record = cfg.record;
    opts.allow_inadmissible = cfg.allow_inadmissible;
    RunResult run;
    if (cfg.kind == MethodKind::Inertial) {
      if (!cfg.schedule) throw ConfigurationError("inertial method '" + cfg.method_id + "' has no schedule");
      run = run_inertial(prob, *cfg.schedule, cfg.z0, cfg.z1.value_or(cfg.z0), opts);
    } else {
      run = run_direct_method(prob, cfg.tau, cfg.z0, opts);
    }
    if (run.stop_reason == StopReason::Tolerance) row.iters_to_tol = run.final_index;
    row.final_residual = run.final_residual;
    row.run = std::move(run);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

ComparisonTable compare_methods(const ProblemInstance& prob, const std::vector<MethodConfig>& configs,
                                const StopRule& stop, bool concurrent) {
  if (configs.size() < 2) throw ConfigurationError("compare_methods needs at least two configurations");
  ComparisonTable table;
  table.stop = stop;
  if (!concurrent) {
    for (const auto& cfg : configs) table.rows.push_back(run_one(prob, cfg, stop));
    return table;
  }
  std::vector<std::future<ComparisonRow>> jobs;
  jobs.reserve(configs.size());
  for (const auto& cfg : configs) {
    jobs.push_back(std::async(std::launch::async, [&prob, &cfg, &stop] { return run_one(prob, cfg, stop); }));
  }
  for (auto& j : jobs) table.rows.push_back(j.get());
  return table;
}

}  // namespace paravi
