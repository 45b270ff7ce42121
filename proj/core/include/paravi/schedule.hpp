#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace paravi {

using ScalarFn = std::function<double(double)>;
using SequenceFn = std::function<double(std::int64_t)>;

// Family tags record the parameters a schedule was built from, so that
// validators can certify the infinite-horizon conditions exactly.

/// alpha0 = (t+1)^-q, alpha1 = h + (t+1)^-s, delta = (t+1)^-p, lambda = 0.
struct PowerLawA {
  double h, s, p, q;
};

/// alpha0 = (t+1)^-q, alpha1 = h + (t+1)^-s, delta = u, lambda = 0.
struct PowerLawB {
  double h, s, q, u;
};

/// beta0 = (n+omega)^-q, beta1 = 1 + delta (n+omega)^-p, xi = (n+omega)^-p,
/// eta = -theta (n+omega)^-lambda.
struct PowerLawD {
  double p, q, delta, theta, lambda, omega;
};

struct CustomFamily {};

using ContinuousFamily = std::variant<CustomFamily, PowerLawA, PowerLawB>;
using DiscreteFamily = std::variant<CustomFamily, PowerLawD>;

/// Coefficients (alpha0, alpha1, delta, lambda) of the second-order flow
///   x'' + alpha1 x' = delta (y - x),
///   y = P(x + lambda x' - alpha0 / max{1,|U|} U(x + lambda x')).
/// The derivative members are empty unless a closed form is known.
struct ContinuousSchedule {
  ScalarFn alpha0;
  ScalarFn alpha1;
  ScalarFn delta;
  ScalarFn lambda;
  double t0 = 0.0;
  ContinuousFamily family = CustomFamily{};
  std::string label = "custom";

  ScalarFn dalpha1;
  ScalarFn ddelta;
  ScalarFn dlambda;

  static ContinuousSchedule constant(double alpha0, double alpha1, double delta, double lambda, double t0 = 0.0);

  /// Exact when a closed form was supplied, otherwise a central difference
  /// with step 1e-4 (one-sided within 1e-4 of t0).
  double alpha1_rate(double t) const;
  double delta_rate(double t) const;
  double lambda_rate(double t) const;

  bool is_family() const noexcept { return !std::holds_alternative<CustomFamily>(family); }
};

inline constexpr double kDerivativeStep = 1e-4;

/// Coefficients (beta0, beta1, xi, eta) of the inertial iteration
///   z(n+1) = [2 - beta1 - xi] z(n) + [beta1 - 1] z(n-1) + xi w(n).
struct DiscreteSchedule {
  SequenceFn beta0;
  SequenceFn beta1;
  SequenceFn xi;
  SequenceFn eta;
  DiscreteFamily family = CustomFamily{};
  std::string label = "custom";

  bool is_family() const noexcept { return !std::holds_alternative<CustomFamily>(family); }
};

/// First-order flow x' = delta (P(x - alpha/max{1,|U|} U(x)) - x).
struct FirstOrderSchedule {
  ScalarFn delta;
  ScalarFn alpha;
  double t0 = 0.0;
};

// Parameter boxes. Each returns the violated inequalities, empty when the
// parameters are admissible.
std::vector<std::string> powerlawA_violations(double h, double s, double p, double q);
std::vector<std::string> powerlawB_violations(double h, double s, double q, double u);
std::vector<std::string> powerlawD_violations(double p, double q, double delta, double theta, double lambda,
                                              std::optional<double> omega);

/// Smallest admissible omega is anything strictly above this value.
double powerlawD_omega_bound(double p, double delta, double theta, double lambda);

/// Builders throw ScheduleRejected listing every violated inequality.
ContinuousSchedule build_continuous_powerlawA(double h, double s, double p, double q, double t0 = 0.0);
ContinuousSchedule build_continuous_powerlawB(double h, double s, double q, double u, double t0 = 0.0);
/// Without omega, uses omega = bound + 1.
DiscreteSchedule build_discrete_powerlawD(double p, double q, double delta, double theta, double lambda,
                                          std::optional<double> omega = std::nullopt);

struct ContinuousConstants {
  double c1;
  double c2;
};

struct DiscreteConstants {
  double q1;
  double q2;
};

/// (C1, C2) = (2h, 2) for PowerLawA and (h/u, h) for PowerLawB.
ContinuousConstants continuous_family_constants(const ContinuousSchedule& sched);

/// Q1 = 1 - (theta/omega^lambda)^2, Q2 = 1 - (delta+1)/omega^p.
/// Throws UnsupportedError for a custom schedule.
DiscreteConstants discrete_family_constants(const DiscreteSchedule& sched);

/// Direct-method steps beta0(n) = n^-tau, n >= 1.
SequenceFn direct_method_steps(double tau);

}  // namespace paravi
