#include "paravi/problem.hpp"

#include <algorithm>
#include <limits>
#include <random>

#include "paravi/error.hpp"

namespace paravi {

ProblemInstance::ProblemInstance(Operator op, FeasibleSet set, std::optional<Point> reference_solution,
                                 std::string name)
    : op_(std::move(op)), set_(std::move(set)), reference_(std::move(reference_solution)), name_(std::move(name)) {
  if (op_.dimension() != set_.dimension()) {
    throw DefinitionError("operator dimension " + std::to_string(op_.dimension()) +
                          " differs from set dimension " + std::to_string(set_.dimension()));
  }
  if (reference_) {
    if (reference_->size() != dimension() || !reference_->allFinite()) {
      throw DefinitionError("reference solution has wrong dimension or non-finite entries");
    }
    if (!set_.contains(*reference_, 1e-10)) throw DefinitionError("reference solution lies outside the set");
    const double r = natural_residual(*this, *reference_);
    if (r > 1e-10) {
      throw DefinitionError("reference solution has natural residual " + std::to_string(r));
    }
  }
}

Point normalized_forward_step(const ProblemInstance& prob, const Point& base, double alpha) {
  if (!(alpha >= 0.0)) throw DefinitionError("forward step size must be nonnegative");
  if (alpha == 0.0) return prob.set().project(base);
  const Point u = prob.op()(base);
  const double scale = alpha / std::max(1.0, u.norm());
  return prob.set().project(base - scale * u);
}

double natural_residual(const ProblemInstance& prob, const Point& x) {
  const Point u = prob.op()(x);
  return (x - prob.set().project(x - u)).norm();
}

MonotonicityReport monotonicity_probe(const Operator& op, const FeasibleSet& set, std::size_t samples,
                                      std::uint64_t seed) {
  if (samples < 1) throw ConfigurationError("monotonicity probe needs at least one sample");
  if (op.dimension() != set.dimension()) throw DefinitionError("operator and set dimensions differ");

  std::mt19937_64 rng(seed);
  MonotonicityReport report;
  report.samples = samples;
  report.min_inner = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < samples; ++i) {
    const Point a = set.sample(rng);
    const Point b = set.sample(rng);
    const Point du = op(a) - op(b);
    const double inner = du.dot(a - b);
    report.min_inner = std::min(report.min_inner, inner);
    if (inner < kParamonoInnerFloor && du.norm() > kParamonoOperatorFloor) ++report.paramono_witnesses;
  }
  return report;
}

}  // namespace paravi
