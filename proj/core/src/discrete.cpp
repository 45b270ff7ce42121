#include "paravi/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

#include "paravi/error.hpp"
#include "paravi/validation.hpp"

namespace paravi {

namespace {

constexpr double kStartTol = 1e-10;

void check_start(const ProblemInstance& prob, const Point& p, const char* what) {
  if (p.size() != prob.dimension()) throw DefinitionError(std::string(what) + " has the wrong dimension");
  if (!all_finite(p)) throw DefinitionError(std::string(what) + " is not finite");
  if (!prob.set().contains(p, kStartTol)) throw ConfigurationError(std::string(what) + " is not in the feasible set");
}

void check_options(const RunOptions& opts) {
  const auto& s = opts.stop;
  if (s.max_iters < 1) throw ConfigurationError("max_iters must be >= 1");
  if (!(s.residual_tol >= 0.0)) throw ConfigurationError("residual_tol must be >= 0");
  if (!(s.stagnation_tol >= 0.0)) throw ConfigurationError("stagnation_tol must be >= 0");
  if (s.stagnation_window < 1) throw ConfigurationError("stagnation_window must be >= 1");
  if (opts.record.every < 1 || opts.record.dense_until < 0) throw ConfigurationError("invalid record policy");
}

/// Shared bookkeeping: logging, stop tests, divergence.
class Driver {
 public:
  Driver(const ProblemInstance& prob, const RunOptions& opts, std::string algorithm) : prob_(prob), opts_(opts) {
    result_.algorithm = std::move(algorithm);
    result_.dimension = prob.dimension();
  }

  /// Registers z(n). Returns true when the run should stop.
  bool accept(std::int64_t n, const Point& z, double step_norm) {
    if (!all_finite(z)) throw DivergenceError(static_cast<double>(n - 1), "iterate became non-finite");
    const double viol = prob_.set().violation(z);
    result_.max_feas_violation = std::max(result_.max_feas_violation, viol);

    const auto& stop = opts_.stop;
    std::optional<double> residual;
    if (stop.residual_tol > 0.0) residual = natural_residual(prob_, z);

    std::optional<StopReason> reason;
    if (residual && *residual <= stop.residual_tol) {
      reason = StopReason::Tolerance;
    } else if (stop.stagnation_tol > 0.0 && n > first_ && step_norm < stop.stagnation_tol) {
      if (++stagnant_ >= stop.stagnation_window) reason = StopReason::Stagnation;
    } else {
      stagnant_ = 0;
    }
    if (!reason && n >= stop.max_iters) reason = StopReason::MaxIterations;

    const auto& rec = opts_.record;
    const bool log_it = reason || n <= rec.dense_until || n % rec.every == 0;
    if (log_it) {
      if (!residual) residual = natural_residual(prob_, z);
      result_.log.push_back({n, z, *residual, viol, step_norm});
    }
    if (reason) {
      result_.stop_reason = *reason;
      result_.final = z;
      result_.final_index = n;
      result_.final_residual = *residual;
    }
    return reason.has_value();
  }

  void set_first(std::int64_t n) { first_ = n; }
  void warn_once(const std::string& msg) {
    if (std::find(result_.warnings.begin(), result_.warnings.end(), msg) == result_.warnings.end()) {
      result_.warnings.push_back(msg);
    }
  }
  RunResult take() { return std::move(result_); }

 private:
  const ProblemInstance& prob_;
  const RunOptions& opts_;
  RunResult result_;
  std::int64_t first_ = 0;
  std::int64_t stagnant_ = 0;
};

}  // namespace

std::string_view to_string(StopReason r) noexcept {
  switch (r) {
    case StopReason::Tolerance:
      return "tol";
    case StopReason::MaxIterations:
      return "max_iters";
    case StopReason::Stagnation:
      return "stagnation";
  }
  return "unknown";
}

Point smoothing_point_discrete(const ProblemInstance& prob, const DiscreteSchedule& sched,
                               const IterateWindow& window) {
  if (window.z_prev.size() != prob.dimension() || window.z_curr.size() != prob.dimension()) {
    throw DefinitionError("iterate window dimension mismatch");
  }
  const double eta = sched.eta(window.n);
  const Point base = window.z_curr + eta * (window.z_curr - window.z_prev);
  return normalized_forward_step(prob, base, sched.beta0(window.n));
}

std::array<double, 3> inertial_coefficients(const DiscreteSchedule& sched, std::int64_t n) {
  const double b1 = sched.beta1(n);
  const double xi = sched.xi(n);
  return {2.0 - b1 - xi, b1 - 1.0, xi};
}

Point inertial_step(const ProblemInstance& prob, const DiscreteSchedule& sched, const IterateWindow& window) {
  const auto c = inertial_coefficients(sched, window.n);
  const Point w = smoothing_point_discrete(prob, sched, window);
  return c[0] * window.z_curr + c[1] * window.z_prev + c[2] * w;
}

RunResult run_inertial(const ProblemInstance& prob, const DiscreteSchedule& sched, const Point& z0, const Point& z1,
                       const RunOptions& opts) {
  check_options(opts);
  check_start(prob, z0, "z0");
  check_start(prob, z1, "z1");

  Driver driver(prob, opts, "inertial");
  driver.set_first(1);
  // z(0) is logged but never tested against the stop rule.
  IterateWindow win{1, z0, z1};
  const double viol0 = prob.set().violation(z0);
  const IterateRecord head{0, z0, natural_residual(prob, z0), viol0, 0.0};

  bool done = driver.accept(1, z1, (z1 - z0).norm());
  bool warned = false;
  while (!done) {
    const std::int64_t n = win.n;
    const double b1 = sched.beta1(n);
    const double xi = sched.xi(n);
    const double eta = sched.eta(n);
    const bool coeffs_ok = b1 >= 1.0 && xi >= 0.0 && b1 + xi <= 2.0;
    const bool eta_ok = eta >= -1.0 && eta <= 0.0;
    if (!coeffs_ok || !eta_ok) {
      const auto id = coeffs_ok ? cond::kEtaRange : cond::kConvexCoefficients;
      const std::string detail = "beta1=" + std::to_string(b1) + " xi=" + std::to_string(xi) +
                                 " eta=" + std::to_string(eta);
      if (!opts.allow_inadmissible) throw ConditionFailure(std::string(id), static_cast<double>(n), detail);
      if (!warned) {
        driver.warn_once(std::string(id) + " violated (first at n=" + std::to_string(n) + "); feasibility not guaranteed");
        warned = true;
      }
    }

    Point next = inertial_step(prob, sched, win);
    const double step = (next - win.z_curr).norm();
    win.z_prev = std::move(win.z_curr);
    win.z_curr = std::move(next);
    win.n = n + 1;
    done = driver.accept(win.n, win.z_curr, step);
  }

  RunResult out = driver.take();
  out.max_feas_violation = std::max(out.max_feas_violation, viol0);
  out.log.insert(out.log.begin(), head);
  return out;
}

RunResult run_direct_method(const ProblemInstance& prob, double tau, const Point& z0, const RunOptions& opts) {
  check_options(opts);
  check_start(prob, z0, "z0");
  const SequenceFn beta0 = direct_method_steps(tau);

  Driver driver(prob, opts, "direct");
  driver.set_first(1);
  Point x = z0;
  std::int64_t n = 1;
  bool done = driver.accept(n, x, 0.0);
  while (!done) {
    Point next = normalized_forward_step(prob, x, beta0(n));
    const double step = (next - x).norm();
    x = std::move(next);
    ++n;
    done = driver.accept(n, x, step);
  }
  return driver.take();
}

}  // namespace paravi
