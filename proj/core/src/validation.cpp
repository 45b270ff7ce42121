#include "paravi/validation.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "paravi/error.hpp"

namespace paravi {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSlack = 1e-12;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

/// Accumulates pointwise results for one condition.
class PointwiseCheck {
 public:
  explicit PointwiseCheck(std::string_view id) : id_(id) {}

  // Records the first failure only.
  void observe(bool ok, double where, const std::string& detail) {
    if (!ok && !failed_) {
      failed_ = true;
      where_ = where;
      detail_ = detail;
    }
  }

  ConditionCheck finish(double horizon, std::string pass_detail = {}) const {
    if (failed_) return {id_, ConditionStatus::Fail, where_, detail_};
    return {id_, ConditionStatus::NumericPass, horizon, std::move(pass_detail)};
  }

 private:
  std::string id_;
  bool failed_ = false;
  double where_ = kNaN;
  std::string detail_;
};

ConditionCheck analytic(std::string_view id, bool ok, const std::string& detail) {
  return {std::string(id), ok ? ConditionStatus::AnalyticPass : ConditionStatus::Fail, kNaN, detail};
}

void finalize(ValidationReport& report) {
  report.satisfied = true;
  for (const auto& c : report.checks)
    if (c.status == ConditionStatus::Fail) report.satisfied = false;
}

}  // namespace

std::string_view to_string(ConditionStatus s) noexcept {
  switch (s) {
    case ConditionStatus::AnalyticPass:
      return "analytic-pass";
    case ConditionStatus::NumericPass:
      return "numeric-pass";
    case ConditionStatus::Deferred:
      return "deferred";
    case ConditionStatus::Fail:
      return "fail";
  }
  return "unknown";
}

const ConditionCheck* ValidationReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> ValidationReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status == ConditionStatus::Fail) out.push_back(c.id);
  return out;
}

double momentum_lower_bound(double q2) { return q2 / std::sqrt(1.0 + q2); }

ValidationReport validate_continuous(const ContinuousSchedule& sched, double c1, double c2, double horizon,
                                     std::size_t grid) {
  if (!(horizon > sched.t0)) throw ConfigurationError("validation horizon must exceed t0");
  if (grid < 2) throw ConfigurationError("validation grid needs at least 2 points");

  ValidationReport report;
  report.constants = ContinuousConstants{c1, c2};
  report.checks.push_back({std::string(cond::kPositiveConstantsC),
                           (c1 > 0.0 && c2 > 0.0) ? ConditionStatus::AnalyticPass : ConditionStatus::Fail, kNaN,
                           "C1=" + fmt(c1) + ", C2=" + fmt(c2)});

  PointwiseCheck signs(cond::kContinuousSigns);
  PointwiseCheck feasible(cond::kFeasibleDamping);
  PointwiseCheck margin(cond::kDampingMargin);
  PointwiseCheck monotone(cond::kDampingMonotone);
  PointwiseCheck bounded(cond::kLambdaBounded);

  const double dt = (horizon - sched.t0) / static_cast<double>(grid - 1);
  double lambda_max = 0.0;
  bool lambda_zero = true;
  double int_sq = 0.0;
  double int_lin = 0.0;
  double prev_sq = kNaN;
  double prev_lin = kNaN;

  for (std::size_t k = 0; k < grid; ++k) {
    const double t = (k + 1 == grid) ? horizon : sched.t0 + static_cast<double>(k) * dt;
    const double a0 = sched.alpha0(t);
    const double a1 = sched.alpha1(t);
    const double d = sched.delta(t);
    const double l = sched.lambda(t);
    const double da1 = sched.alpha1_rate(t);

    const bool finite = std::isfinite(a0) && std::isfinite(a1) && std::isfinite(d) && std::isfinite(l);
    signs.observe(finite && a0 > 0.0 && a1 > 0.0 && d > 0.0 && l >= 0.0, t,
                  "alpha0=" + fmt(a0) + " alpha1=" + fmt(a1) + " delta=" + fmt(d) + " lambda=" + fmt(l));

    const double rhs = 0.25 * (a1 * a1 + 2.0 * da1);
    feasible.observe(d < rhs, t, "delta=" + fmt(d) + " >= " + fmt(rhs));

    const double lhs = 2.0 * a1 - 2.0 * d * l - c2 * d;
    margin.observe(lhs >= c1 - kSlack * std::max(1.0, std::abs(c1)), t, fmt(lhs) + " < C1=" + fmt(c1));

    if (!sched.is_family()) {
      const double rate = da1 - sched.delta_rate(t) * l - d * sched.lambda_rate(t);
      monotone.observe(rate <= 1e-9, t, "rate=" + fmt(rate));
    }

    bounded.observe(std::isfinite(l), t, "lambda not finite");
    lambda_max = std::max(lambda_max, l);
    if (l != 0.0) lambda_zero = false;

    const double sq = d * a0 * a0;
    const double lin = d * a0;
    if (k > 0) {
      int_sq += 0.5 * dt * (sq + prev_sq);
      int_lin += 0.5 * dt * (lin + prev_lin);
    }
    prev_sq = sq;
    prev_lin = lin;
  }

  report.checks.push_back(signs.finish(horizon));
  report.checks.push_back(feasible.finish(horizon));
  report.checks.push_back(margin.finish(horizon));

  const std::string caveat = "finite-horizon only";
  if (const auto* a = std::get_if<PowerLawA>(&sched.family)) {
    report.checks.push_back(analytic(cond::kLambdaBounded, true, "lambda=0"));
    report.checks.push_back(analytic(cond::kDampingMonotone, a->s > 0.0, "rate=-s/(t+1)^(s+1)"));
    report.checks.push_back(analytic(cond::kStepSquareIntegrable, a->p + 2.0 * a->q > 1.0, "p+2q>1"));
    report.checks.push_back(analytic(cond::kStepNotIntegrable, a->p + a->q <= 1.0, "p+q<=1"));
    report.checks.push_back(analytic(cond::kSmoothingInside, true, "lambda=0"));
  } else if (const auto* b = std::get_if<PowerLawB>(&sched.family)) {
    report.checks.push_back(analytic(cond::kLambdaBounded, true, "lambda=0"));
    report.checks.push_back(analytic(cond::kDampingMonotone, b->s > 0.0, "rate=-s/(t+1)^(s+1)"));
    report.checks.push_back(analytic(cond::kStepSquareIntegrable, 2.0 * b->q > 1.0, "2q>1"));
    report.checks.push_back(analytic(cond::kStepNotIntegrable, b->q <= 1.0, "q<=1"));
    report.checks.push_back(analytic(cond::kSmoothingInside, true, "lambda=0"));
  } else {
    report.checks.push_back(bounded.finish(horizon, "max lambda=" + fmt(lambda_max) + ", " + caveat));
    report.checks.push_back(monotone.finish(horizon));

    ConditionCheck sq{std::string(cond::kStepSquareIntegrable), ConditionStatus::NumericPass, horizon,
                      "partial integral=" + fmt(int_sq) + ", " + caveat};
    if (!std::isfinite(int_sq)) sq = {sq.id, ConditionStatus::Fail, horizon, "partial integral not finite"};
    report.checks.push_back(sq);
    report.checks.push_back({std::string(cond::kStepNotIntegrable), ConditionStatus::NumericPass, horizon,
                             "partial integral=" + fmt(int_lin) + ", " + caveat});

    if (lambda_zero) {
      report.checks.push_back({std::string(cond::kSmoothingInside), ConditionStatus::NumericPass, horizon,
                               "lambda=0 on the grid"});
    } else {
      report.checks.push_back({std::string(cond::kSmoothingInside), ConditionStatus::Deferred, kNaN,
                               "depends on the Riccati solution gamma; checked along the run by "
                               "integrate_coupled_feasible"});
    }
  }

  finalize(report);
  return report;
}

ValidationReport validate_discrete(const DiscreteSchedule& sched, double q1, double q2, std::int64_t horizon) {
  if (horizon < 2) throw ConfigurationError("discrete validation horizon must be >= 2");

  ValidationReport report;
  report.constants = DiscreteConstants{q1, q2};
  const bool q_ok = q2 > 0.0 && q2 < 1.0 && q1 > 0.0;
  report.checks.push_back({std::string(cond::kConstantsRangeQ),
                           q_ok ? ConditionStatus::AnalyticPass : ConditionStatus::Fail, kNaN,
                           "Q1=" + fmt(q1) + ", Q2=" + fmt(q2)});

  PointwiseCheck signs(cond::kDiscreteSigns);
  PointwiseCheck contraction(cond::kContraction);
  PointwiseCheck eta_range(cond::kEtaRange);
  PointwiseCheck monotone(cond::kMomentumMonotone);
  PointwiseCheck convex(cond::kConvexCoefficients);

  const auto H = static_cast<double>(horizon);
  double prev_momentum = kNaN;
  double sum_sq = 0.0;
  double sum_lin = 0.0;
  for (std::int64_t n = 0; n <= horizon; ++n) {
    const auto where = static_cast<double>(n);
    const double b0 = sched.beta0(n);
    const double b1 = sched.beta1(n);
    const double xi = sched.xi(n);
    const double eta = sched.eta(n);

    const bool finite = std::isfinite(b0) && std::isfinite(b1) && std::isfinite(xi) && std::isfinite(eta);
    signs.observe(finite && b0 >= 0.0 && xi >= 0.0, where,
                  "beta0=" + fmt(b0) + " xi=" + fmt(xi));

    const double lhs = (b1 - 1.0 + xi) * (b1 - 1.0 + (eta * eta + q1) * xi);
    contraction.observe(lhs <= 1.0 - q2 + kSlack, where, fmt(lhs) + " > 1-Q2=" + fmt(1.0 - q2));

    eta_range.observe(eta >= -1.0 && eta <= 0.0, where, "eta=" + fmt(eta));

    const double momentum = b1 - xi * eta;
    if (n > 0) {
      monotone.observe(momentum <= prev_momentum + kSlack, where,
                       fmt(momentum) + " > previous " + fmt(prev_momentum));
    }
    prev_momentum = momentum;

    convex.observe(b1 >= 1.0 - kSlack && xi >= 0.0 && b1 + xi <= 2.0 + kSlack, where,
                   "beta1=" + fmt(b1) + " beta1+xi=" + fmt(b1 + xi));

    sum_sq += xi * b0 * b0;
    sum_lin += xi * b0;
  }

  report.checks.push_back(signs.finish(H));
  report.checks.push_back(contraction.finish(H));
  report.checks.push_back(eta_range.finish(H));
  report.checks.push_back(monotone.finish(H));
  report.checks.push_back(convex.finish(H));

  if (const auto* d = std::get_if<PowerLawD>(&sched.family)) {
    report.checks.push_back(analytic(cond::kSumSquare, d->p + 2.0 * d->q > 1.0, "p+2q>1"));
    report.checks.push_back(analytic(cond::kSumDiverges, d->p + d->q <= 1.0, "p+q<=1"));
  } else {
    const std::string caveat = "finite-horizon only";
    ConditionCheck sq{std::string(cond::kSumSquare), ConditionStatus::NumericPass, H,
                      "partial sum=" + fmt(sum_sq) + ", " + caveat};
    if (!std::isfinite(sum_sq)) sq = {sq.id, ConditionStatus::Fail, H, "partial sum not finite"};
    report.checks.push_back(sq);
    report.checks.push_back({std::string(cond::kSumDiverges), ConditionStatus::NumericPass, H,
                             "partial sum=" + fmt(sum_lin) + ", " + caveat});
  }

  finalize(report);
  return report;
}

}  // namespace paravi
