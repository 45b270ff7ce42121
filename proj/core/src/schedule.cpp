#include "paravi/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "paravi/error.hpp"

namespace paravi {

namespace {

double rate(const ScalarFn& exact, const ScalarFn& f, double t, double t0) {
  if (exact) return exact(t);
  const double h = kDerivativeStep;
  if (t - h < t0) return (f(t + h) - f(t)) / h;
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace

ContinuousSchedule ContinuousSchedule::constant(double alpha0, double alpha1, double delta, double lambda,
                                                double t0) {
  ContinuousSchedule s;
  s.alpha0 = [alpha0](double) { return alpha0; };
  s.alpha1 = [alpha1](double) { return alpha1; };
  s.delta = [delta](double) { return delta; };
  s.lambda = [lambda](double) { return lambda; };
  s.dalpha1 = [](double) { return 0.0; };
  s.ddelta = [](double) { return 0.0; };
  s.dlambda = [](double) { return 0.0; };
  s.t0 = t0;
  s.label = "constant";
  return s;
}

double ContinuousSchedule::alpha1_rate(double t) const { return rate(dalpha1, alpha1, t, t0); }
double ContinuousSchedule::delta_rate(double t) const { return rate(ddelta, delta, t, t0); }
double ContinuousSchedule::lambda_rate(double t) const { return rate(dlambda, lambda, t, t0); }

std::vector<std::string> powerlawA_violations(double h, double s, double p, double q) {
  std::vector<std::string> out;
  if (!(h > 2.0)) out.emplace_back("h>2");
  if (!(s > 0.0 && s < 0.5)) out.emplace_back("0<s<1/2");
  if (!(p > s && p < 1.0)) out.emplace_back("s<p<1");
  if (!(q > 0.5 * (1.0 - p) && q <= 1.0 - p)) out.emplace_back("(1-p)/2<q<=1-p");
  return out;
}

std::vector<std::string> powerlawB_violations(double h, double s, double q, double u) {
  std::vector<std::string> out;
  if (!(u > 0.0)) out.emplace_back("u>0");
  if (!(h > 2.0 * std::sqrt(u))) out.emplace_back("h>2*sqrt(u)");
  if (!(s > 0.0 && s < 0.5)) out.emplace_back("0<s<1/2");
  if (!(q > 0.5 && q <= 1.0)) out.emplace_back("1/2<q<=1");
  return out;
}

double powerlawD_omega_bound(double p, double delta, double theta, double lambda) {
  return std::max(std::pow(delta + 1.0, 1.0 / p), std::pow(theta, 1.0 / lambda));
}

std::vector<std::string> powerlawD_violations(double p, double q, double delta, double theta, double lambda,
                                              std::optional<double> omega) {
  std::vector<std::string> out;
  if (!(p > 0.0 && p < 1.0)) out.emplace_back("0<p<1");
  if (!(q > 0.5 * (1.0 - p) && q <= 1.0 - p)) out.emplace_back("(1-p)/2<q<=1-p");
  if (!(delta > 0.0)) out.emplace_back("delta>0");
  if (!(theta > 0.0)) out.emplace_back("theta>0");
  if (!(lambda > 0.0)) out.emplace_back("lambda>0");
  if (omega && out.empty()) {
    if (!(*omega > powerlawD_omega_bound(p, delta, theta, lambda))) {
      out.emplace_back("omega>max{(delta+1)^(1/p), theta^(1/lambda)}");
    }
  }
  return out;
}

ContinuousSchedule build_continuous_powerlawA(double h, double s, double p, double q, double t0) {
  if (auto bad = powerlawA_violations(h, s, p, q); !bad.empty()) throw ScheduleRejected(std::move(bad));
  ContinuousSchedule c;
  c.alpha0 = [q](double t) { return std::pow(t + 1.0, -q); };
  c.alpha1 = [h, s](double t) { return h + std::pow(t + 1.0, -s); };
  c.delta = [p](double t) { return std::pow(t + 1.0, -p); };
  c.lambda = [](double) { return 0.0; };
  c.dalpha1 = [s](double t) { return -s * std::pow(t + 1.0, -s - 1.0); };
  c.ddelta = [p](double t) { return -p * std::pow(t + 1.0, -p - 1.0); };
  c.dlambda = [](double) { return 0.0; };
  c.t0 = t0;
  c.family = PowerLawA{h, s, p, q};
  c.label = "powerlawA";
  return c;
}

ContinuousSchedule build_continuous_powerlawB(double h, double s, double q, double u, double t0) {
  if (auto bad = powerlawB_violations(h, s, q, u); !bad.empty()) throw ScheduleRejected(std::move(bad));
  ContinuousSchedule c;
  c.alpha0 = [q](double t) { return std::pow(t + 1.0, -q); };
  c.alpha1 = [h, s](double t) { return h + std::pow(t + 1.0, -s); };
  c.delta = [u](double) { return u; };
  c.lambda = [](double) { return 0.0; };
  c.dalpha1 = [s](double t) { return -s * std::pow(t + 1.0, -s - 1.0); };
  c.ddelta = [](double) { return 0.0; };
  c.dlambda = [](double) { return 0.0; };
  c.t0 = t0;
  c.family = PowerLawB{h, s, q, u};
  c.label = "powerlawB";
  return c;
}

DiscreteSchedule build_discrete_powerlawD(double p, double q, double delta, double theta, double lambda,
                                          std::optional<double> omega) {
  if (auto bad = powerlawD_violations(p, q, delta, theta, lambda, omega); !bad.empty()) {
    throw ScheduleRejected(std::move(bad));
  }
  const double w = omega.value_or(powerlawD_omega_bound(p, delta, theta, lambda) + 1.0);
  DiscreteSchedule d;
  d.beta0 = [q, w](std::int64_t n) { return std::pow(static_cast<double>(n) + w, -q); };
  d.beta1 = [p, delta, w](std::int64_t n) { return 1.0 + delta * std::pow(static_cast<double>(n) + w, -p); };
  d.xi = [p, w](std::int64_t n) { return std::pow(static_cast<double>(n) + w, -p); };
  d.eta = [theta, lambda, w](std::int64_t n) { return -theta * std::pow(static_cast<double>(n) + w, -lambda); };
  d.family = PowerLawD{p, q, delta, theta, lambda, w};
  d.label = "powerlawD";
  return d;
}

ContinuousConstants continuous_family_constants(const ContinuousSchedule& sched) {
  if (const auto* a = std::get_if<PowerLawA>(&sched.family)) return {2.0 * a->h, 2.0};
  if (const auto* b = std::get_if<PowerLawB>(&sched.family)) return {b->h / b->u, b->h};
  throw UnsupportedError("custom continuous schedules have no family constants; supply C1 and C2");
}

DiscreteConstants discrete_family_constants(const DiscreteSchedule& sched) {
  const auto* d = std::get_if<PowerLawD>(&sched.family);
  if (!d) throw UnsupportedError("custom discrete schedules have no family constants; supply Q1 and Q2");
  const double r = d->theta / std::pow(d->omega, d->lambda);
  return {1.0 - r * r, 1.0 - (d->delta + 1.0) / std::pow(d->omega, d->p)};
}

SequenceFn direct_method_steps(double tau) {
  if (!(tau > 0.5 && tau <= 1.0)) throw ConfigurationError("direct method needs tau in (0.5, 1]");
  return [tau](std::int64_t n) { return std::pow(static_cast<double>(n), -tau); };
}

}  // namespace paravi
