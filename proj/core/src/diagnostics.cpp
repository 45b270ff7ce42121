#include "paravi/diagnostics.hpp"

#include <limits>

#include "paravi/error.hpp"

namespace paravi {

namespace {

void check_reference(const std::optional<Point>& reference, bool require, Index dim) {
  if (!reference) {
    if (require) throw ConfigurationError("v_ref requested but no reference solution is available");
    return;
  }
  if (reference->size() != dim) throw DefinitionError("reference solution has the wrong dimension");
}

}  // namespace

ContinuousEnergy compute_energy(const ContinuousTrajectory& traj, const std::optional<Point>& reference,
                                bool require_reference) {
  check_reference(reference, require_reference, traj.dimension);
  ContinuousEnergy e;
  for (const auto& s : traj.samples) {
    e.t.push_back(s.t);
    e.b.push_back(0.5 * s.speed * s.speed);
    if (reference) e.v_ref.push_back(0.5 * (s.x - *reference).squaredNorm());
  }
  return e;
}

DiscreteEnergy compute_energy(const RunResult& run, const std::optional<Point>& reference, bool require_reference) {
  check_reference(reference, require_reference, run.dimension);
  DiscreteEnergy e;
  const auto& log = run.log;
  for (std::size_t i = 0; i < log.size(); ++i) {
    const auto& r = log[i];
    e.n.push_back(r.n);
    e.c.push_back(r.step_norm * r.step_norm);
    const bool next_logged = i + 1 < log.size() && log[i + 1].n == r.n + 1;
    e.a.push_back(next_logged ? (log[i + 1].z - r.z).squaredNorm() : std::numeric_limits<double>::quiet_NaN());
    if (reference) e.v_ref.push_back((r.z - *reference).squaredNorm());
  }
  return e;
}

}  // namespace paravi
