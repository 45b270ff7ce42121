#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "paravi/schedule.hpp"

namespace paravi {

/// Condition identifiers, spelled as the inequality they check.
namespace cond {
// continuous flow
inline constexpr std::string_view kContinuousSigns = "alpha0>0, alpha1>0, delta>0, lambda>=0";
inline constexpr std::string_view kFeasibleDamping = "delta<(alpha1^2+2*alpha1')/4";
inline constexpr std::string_view kDampingMargin = "2*alpha1-2*delta*lambda-C2*delta>=C1";
inline constexpr std::string_view kPositiveConstantsC = "C1>0, C2>0";
inline constexpr std::string_view kLambdaBounded = "lambda bounded above";
inline constexpr std::string_view kDampingMonotone = "d/dt[alpha1-delta*lambda]<=0";
inline constexpr std::string_view kStepSquareIntegrable = "int delta*alpha0^2 dt<inf";
inline constexpr std::string_view kStepNotIntegrable = "int delta*alpha0 dt=inf";
inline constexpr std::string_view kSmoothingInside = "lambda*gamma<=1";
// discrete iteration
inline constexpr std::string_view kDiscreteSigns = "beta0>=0, xi>=0, finite";
inline constexpr std::string_view kConstantsRangeQ = "0<Q2<1, Q1>0";
inline constexpr std::string_view kContraction = "[beta1-1+xi][beta1-1+(eta^2+Q1)xi]<=1-Q2";
inline constexpr std::string_view kEtaRange = "-1<=eta<=0";
inline constexpr std::string_view kMomentumMonotone = "beta1-xi*eta nonincreasing";
inline constexpr std::string_view kSumSquare = "sum xi*beta0^2<inf";
inline constexpr std::string_view kSumDiverges = "sum xi*beta0=inf";
inline constexpr std::string_view kConvexCoefficients = "1<=beta1<=beta1+xi<=2";
}  // namespace cond

enum class ConditionStatus {
  AnalyticPass,  ///< certified for all t (or n) from the family exponents
  NumericPass,   ///< holds at every checked point up to `location`
  Deferred,      ///< needs data the validator does not have (see detail)
  Fail,          ///< fails first at `location`
};

std::string_view to_string(ConditionStatus s) noexcept;

struct ConditionCheck {
  std::string id;
  ConditionStatus status;
  /// Horizon for NumericPass, first failing t or n for Fail, NaN otherwise.
  double location;
  std::string detail;
};

struct ValidationReport {
  bool satisfied = true;
  std::vector<ConditionCheck> checks;
  std::optional<std::variant<ContinuousConstants, DiscreteConstants>> constants;

  const ConditionCheck* find(std::string_view id) const;
  std::vector<std::string> failures() const;
};

inline constexpr double kDefaultContinuousSpan = 1e3;
inline constexpr std::size_t kDefaultContinuousGrid = 10001;
inline constexpr std::int64_t kDefaultDiscreteHorizon = 10000;

/// Checks the continuous coefficient conditions on a uniform grid of `grid`
/// points over [t0, horizon]. Family-tagged schedules get the monotonicity
/// and integral conditions certified analytically. Failures are reported,
/// never thrown; only a malformed request (horizon <= t0, grid < 2) throws.
ValidationReport validate_continuous(const ContinuousSchedule& sched, double c1, double c2, double horizon,
                                     std::size_t grid = kDefaultContinuousGrid);

/// Checks the discrete coefficient conditions for n = 0..horizon. PowerLawD
/// schedules get the two series conditions certified analytically; custom
/// schedules only get partial sums, marked as finite-horizon evidence.
ValidationReport validate_discrete(const DiscreteSchedule& sched, double q1, double q2,
                                   std::int64_t horizon = kDefaultDiscreteHorizon);

/// Lower bound Q2/sqrt(1+Q2) on beta1 - xi*eta implied by the discrete
/// conditions.
double momentum_lower_bound(double q2);

}  // namespace paravi
