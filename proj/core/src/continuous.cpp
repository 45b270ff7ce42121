#include "paravi/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "paravi/error.hpp"
#include "paravi/validation.hpp"

namespace paravi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kStartTol = 1e-10;
constexpr long long kMaxSubdivisions = 1'000'000;

/// Uniform grid from t0 to t_end; the last step is shortened to land on t_end.
struct Grid {
  double t0;
  double h;
  double t_end;
  std::size_t steps;

  Grid(double t0_, double h_, double t_end_) : t0(t0_), h(h_), t_end(t_end_) {
    if (!(h > 0.0) || !std::isfinite(h)) throw ConfigurationError("integrator step must be positive");
    if (!(t_end > t0)) throw ConfigurationError("t_end must exceed t0");
    const double r = (t_end - t0) / h;
    const double n = std::round(r);
    steps = static_cast<std::size_t>(std::abs(r - n) <= 1e-9 * std::max(1.0, r) ? n : std::ceil(r));
    steps = std::max<std::size_t>(steps, 1);
  }

  double time(std::size_t k) const { return k >= steps ? t_end : t0 + static_cast<double>(k) * h; }
};

template <class T, class F>
T rk4_step(F&& f, double t, const T& y, double h) {
  const T k1 = f(t, y);
  const T k2 = f(t + 0.5 * h, T(y + (0.5 * h) * k1));
  const T k3 = f(t + 0.5 * h, T(y + (0.5 * h) * k2));
  const T k4 = f(t + h, T(y + h * k3));
  return T(y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4));
}

template <class T, class F>
T euler_step(F&& f, double t, const T& y, double h) {
  return T(y + h * f(t, y));
}

bool should_record(std::size_t k, std::size_t steps, std::size_t every) {
  return k == 0 || k == steps || k % every == 0;
}

void check_config(const IntegratorConfig& cfg, const ProblemInstance& prob) {
  if (cfg.record_every == 0) throw ConfigurationError("record_every must be positive");
  if (cfg.fixed_target && cfg.fixed_target->size() != prob.dimension()) {
    throw DefinitionError("fixed target dimension does not match the problem");
  }
}

void check_start(const ProblemInstance& prob, const Point& p, const char* what) {
  if (p.size() != prob.dimension()) throw DefinitionError(std::string(what) + " has the wrong dimension");
  if (!all_finite(p)) throw DefinitionError(std::string(what) + " is not finite");
  if (!prob.set().contains(p, kStartTol)) throw ConfigurationError(std::string(what) + " is not in the feasible set");
}

ContinuousSample make_sample(const ProblemInstance& prob, double t, const Point& x, Point aux, double gamma,
                             double speed) {
  return {t, x, std::move(aux), gamma, natural_residual(prob, x), prob.set().violation(x), speed};
}

ContinuousTrajectory run_second_order(const ProblemInstance& prob, const ContinuousSchedule& sched, const Point& x0,
                                      const Point& v0, const IntegratorConfig& cfg) {
  check_config(cfg, prob);
  const Index d = prob.dimension();
  const Grid grid(sched.t0, cfg.step, cfg.t_end);

  auto f = [&](double t, const Point& s) -> Point {
    const SecondOrderState st{t, s.head(d), s.tail(d)};
    const auto r = rhs_second_order(prob, sched, st, cfg.fixed_target);
    Point out(2 * d);
    out << r.dx, r.dv;
    return out;
  };

  ContinuousTrajectory traj;
  traj.kind = "second-order";
  traj.dimension = d;
  traj.step_used = cfg.step;

  Point s(2 * d);
  s << x0, v0;
  traj.samples.push_back(make_sample(prob, grid.t0, x0, v0, kNaN, v0.norm()));

  double t = grid.t0;
  for (std::size_t k = 0; k < grid.steps; ++k) {
    const double t_next = grid.time(k + 1);
    const double h = t_next - t;
    Point next = cfg.method == StepMethod::Rk4 ? rk4_step<Point>(f, t, s, h) : euler_step<Point>(f, t, s, h);
    if (!all_finite(next)) throw DivergenceError(t, "second-order state became non-finite");
    s = std::move(next);
    t = t_next;
    if (should_record(k + 1, grid.steps, cfg.record_every)) {
      traj.samples.push_back(make_sample(prob, t, s.head(d), s.tail(d), kNaN, s.tail(d).norm()));
    }
  }
  return traj;
}

void check_feasible_damping(const ContinuousSchedule& sched, double t) {
  const double a1 = sched.alpha1(t);
  const double rhs = 0.25 * (a1 * a1 + 2.0 * sched.alpha1_rate(t));
  const double d = sched.delta(t);
  if (!(d < rhs)) {
    throw ConditionFailure(std::string(cond::kFeasibleDamping), t,
                           "delta=" + std::to_string(d) + ", (alpha1^2+2*alpha1')/4=" + std::to_string(rhs));
  }
}

}  // namespace

std::string_view to_string(StepMethod m) noexcept { return m == StepMethod::Rk4 ? "rk4" : "euler"; }

std::string_view to_string(VelocityMode m) noexcept {
  return m == VelocityMode::QuarterConvention ? "quarter_convention" : "explicit";
}

double ContinuousTrajectory::max_feas_violation() const {
  double out = 0.0;
  for (const auto& s : samples) out = std::max(out, s.feas_violation);
  return out;
}

Point quarter_velocity(const ContinuousSchedule& sched, const Point& x0, const Point& x1) {
  if (x0.size() != x1.size()) throw DefinitionError("x0 and x1 dimensions differ");
  return 0.25 * sched.alpha1(sched.t0) * (x1 - x0);
}

Point smoothing_point(const ProblemInstance& prob, const ContinuousSchedule& sched, double t, const Point& x,
                      const Point& v) {
  if (x.size() != prob.dimension() || v.size() != prob.dimension()) {
    throw DefinitionError("smoothing point: dimension mismatch");
  }
  const double l = sched.lambda(t);
  if (l == 0.0) return normalized_forward_step(prob, x, sched.alpha0(t));
  return normalized_forward_step(prob, x + l * v, sched.alpha0(t));
}

SecondOrderRhs rhs_second_order(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                const SecondOrderState& state, const std::optional<Point>& target) {
  const Point y = target ? *target : smoothing_point(prob, sched, state.t, state.x, state.v);
  return {state.v, -sched.alpha1(state.t) * state.v + sched.delta(state.t) * (y - state.x)};
}

ContinuousTrajectory integrate_second_order(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                            const Point& x0, const Point& x1, const IntegratorConfig& cfg) {
  check_start(prob, x0, "x0");
  check_start(prob, x1, "x1");
  return run_second_order(prob, sched, x0, quarter_velocity(sched, x0, x1), cfg);
}

ContinuousTrajectory integrate_second_order_velocity(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                                     const Point& x0, const Point& v0, const IntegratorConfig& cfg) {
  check_start(prob, x0, "x0");
  if (v0.size() != prob.dimension() || !all_finite(v0)) throw DefinitionError("initial velocity is malformed");
  return run_second_order(prob, sched, x0, v0, cfg);
}

double RiccatiTable::at(double time) const {
  if (t.empty()) throw ConfigurationError("empty Riccati table");
  if (time <= t.front()) return gamma.front();
  if (time >= t.back()) return gamma.back();
  const auto hi = static_cast<std::size_t>(std::upper_bound(t.begin(), t.end(), time) - t.begin());
  const std::size_t lo = hi - 1;
  const double w = (time - t[lo]) / (t[hi] - t[lo]);
  return (1.0 - w) * gamma[lo] + w * gamma[hi];
}

RiccatiTable integrate_riccati(const ContinuousSchedule& sched, double t0, double t_end, double step) {
  const Grid grid(t0, step, t_end);
  for (std::size_t k = 0; k <= grid.steps; ++k) check_feasible_damping(sched, grid.time(k));

  auto f = [&](double t, double g) { return g * g + sched.delta(t) - sched.alpha1(t) * g; };
  auto check_bounds = [&](double t, double g) {
    const double half = 0.5 * sched.alpha1(t);
    if (!(g > 0.0 && g < half)) {
      throw ConditionFailure(std::string(kRiccatiBounds), t,
                             "gamma=" + std::to_string(g) + ", alpha1/2=" + std::to_string(half));
    }
  };

  RiccatiTable table;
  table.t.reserve(grid.steps + 1);
  table.gamma.reserve(grid.steps + 1);
  double g = 0.25 * sched.alpha1(t0);
  check_bounds(t0, g);
  table.t.push_back(t0);
  table.gamma.push_back(g);
  for (std::size_t k = 0; k < grid.steps; ++k) {
    const double t = grid.time(k);
    const double t_next = grid.time(k + 1);
    g = rk4_step<double>(f, t, g, t_next - t);
    if (!std::isfinite(g)) throw DivergenceError(t, "Riccati solution became non-finite");
    check_bounds(t_next, g);
    table.t.push_back(t_next);
    table.gamma.push_back(g);
  }
  return table;
}

ContinuousTrajectory integrate_coupled_feasible(const ProblemInstance& prob, const ContinuousSchedule& sched,
                                                const Point& x0, const Point& x1, const IntegratorConfig& cfg) {
  check_config(cfg, prob);
  check_start(prob, x0, "x0");
  check_start(prob, x1, "x1");

  // Find a subdivision with h max(gamma, mu) <= 1 on the grid it is used on.
  long long m = 1;
  RiccatiTable table;
  for (int attempt = 0;; ++attempt) {
    const double h = cfg.step / static_cast<double>(m);
    table = integrate_riccati(sched, sched.t0, cfg.t_end, h);
    double rate = 0.0;
    for (std::size_t k = 0; k < table.t.size(); ++k) {
      const double g = table.gamma[k];
      const double mu = sched.delta(table.t[k]) / g;
      if (!std::isfinite(mu)) {
        throw ConfigurationError("mu = delta/gamma is not finite at t=" + std::to_string(table.t[k]));
      }
      rate = std::max({rate, g, mu});
    }
    if (h * rate <= 1.0) break;
    const double need = std::ceil(cfg.step * rate * (1.0 + 1e-12));
    if (need > static_cast<double>(kMaxSubdivisions) || attempt > 8) {
      throw ConfigurationError("step cap h*max(gamma,mu)<=1 needs more than 1e6 substeps");
    }
    m = std::max(m + 1, static_cast<long long>(need));
  }

  const Index d = prob.dimension();
  const double h_used = cfg.step / static_cast<double>(m);
  ContinuousTrajectory traj;
  traj.kind = "coupled";
  traj.dimension = d;
  traj.step_used = h_used;
  if (m > 1) {
    traj.warnings.push_back("step subdivided by " + std::to_string(m) + " to keep h*max(gamma,mu)<=1");
  }

  Point x = x0;
  Point u = x1;
  const std::size_t steps = table.t.size() - 1;
  const std::size_t every = cfg.record_every * static_cast<std::size_t>(m);
  bool lambda_warned = false;

  traj.samples.push_back(make_sample(prob, table.t[0], x, u, table.gamma[0], table.gamma[0] * (u - x).norm()));
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = table.t[k];
    const double h = table.t[k + 1] - t;
    const double g = table.gamma[k];
    const double mu = sched.delta(t) / g;
    const double l = sched.lambda(t);
    if (!lambda_warned && l * g > 1.0) {
      traj.warnings.push_back(std::string(cond::kSmoothingInside) + " fails at t=" + std::to_string(t) +
                              " (lambda*gamma=" + std::to_string(l * g) + ")");
      lambda_warned = true;
    }
    const Point v = g * (u - x);
    const Point y = cfg.fixed_target ? *cfg.fixed_target : smoothing_point(prob, sched, t, x, v);

    Point x_next = x + (h * g) * (u - x);
    Point u_next = u + (h * mu) * (y - u);
    if (!all_finite(x_next) || !all_finite(u_next)) {
      throw DivergenceError(t, "coupled state became non-finite");
    }
    x = std::move(x_next);
    u = std::move(u_next);
    if (should_record(k + 1, steps, every)) {
      const double g1 = table.gamma[k + 1];
      traj.samples.push_back(make_sample(prob, table.t[k + 1], x, u, g1, g1 * (u - x).norm()));
    }
  }
  return traj;
}

ContinuousTrajectory integrate_first_order_baseline(const ProblemInstance& prob, const FirstOrderSchedule& sched,
                                                    const Point& x0, const IntegratorConfig& cfg) {
  check_config(cfg, prob);
  check_start(prob, x0, "x0");
  const Grid grid(sched.t0, cfg.step, cfg.t_end);
  for (std::size_t k = 0; k < grid.steps; ++k) {
    const double t = grid.time(k);
    const double hd = (grid.time(k + 1) - t) * sched.delta(t);
    if (!(hd <= 1.0)) {
      throw ConfigurationError("step*delta=" + std::to_string(hd) + " exceeds 1 at t=" + std::to_string(t));
    }
  }

  ContinuousTrajectory traj;
  traj.kind = "first-order";
  traj.dimension = prob.dimension();
  traj.step_used = cfg.step;

  auto velocity = [&](double t, const Point& x) -> Point {
    const Point y = cfg.fixed_target ? *cfg.fixed_target : normalized_forward_step(prob, x, sched.alpha(t));
    return sched.delta(t) * (y - x);
  };

  Point x = x0;
  traj.samples.push_back(make_sample(prob, grid.t0, x, Point(), kNaN, velocity(grid.t0, x).norm()));
  for (std::size_t k = 0; k < grid.steps; ++k) {
    const double t = grid.time(k);
    const double t_next = grid.time(k + 1);
    Point next = x + (t_next - t) * velocity(t, x);
    if (!all_finite(next)) throw DivergenceError(t, "first-order state became non-finite");
    x = std::move(next);
    if (should_record(k + 1, grid.steps, cfg.record_every)) {
      traj.samples.push_back(make_sample(prob, t_next, x, Point(), kNaN, velocity(t_next, x).norm()));
    }
  }
  return traj;
}

double counterexample_oracle(double t) { return 1.0 + std::exp(-t) * (std::cos(t) + std::sin(t)); }

double counterexample_velocity(double t) { return -2.0 * std::exp(-t) * std::sin(t); }

}  // namespace paravi
