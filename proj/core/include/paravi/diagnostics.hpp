#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paravi/continuous.hpp"
#include "paravi/discrete.hpp"

namespace paravi {

/// Energy series along a continuous trajectory, one entry per sample.
struct ContinuousEnergy {
  std::vector<double> t;
  /// 1/2 |x - x*|^2; empty without a reference point.
  std::vector<double> v_ref;
  /// 1/2 |x'|^2.
  std::vector<double> b;
};

/// Energy series along a discrete run, one entry per logged iterate.
struct DiscreteEnergy {
  std::vector<std::int64_t> n;
  /// |z(n) - x*|^2; empty without a reference point.
  std::vector<double> v_ref;
  /// |z(n+1) - z(n)|^2, NaN when z(n+1) was not logged.
  std::vector<double> a;
  /// |z(n) - z(n-1)|^2.
  std::vector<double> c;
};

/// With `require_reference` set, a missing reference is a ConfigurationError.
ContinuousEnergy compute_energy(const ContinuousTrajectory& traj, const std::optional<Point>& reference,
                                bool require_reference = false);
DiscreteEnergy compute_energy(const RunResult& run, const std::optional<Point>& reference,
                              bool require_reference = false);

}  // namespace paravi
