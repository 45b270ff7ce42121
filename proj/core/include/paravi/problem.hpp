#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "paravi/operator.hpp"
#include "paravi/sets.hpp"
#include "paravi/types.hpp"

namespace paravi {

/// The pair (U, Omega) of a variational inequality: find x in Omega with
/// <U(x), a - x> >= 0 for all a in Omega.
class ProblemInstance {
 public:
  /// Throws DefinitionError if the dimensions disagree or if the reference
  /// solution is outside the set or has natural residual above 1e-10.
  ProblemInstance(Operator op, FeasibleSet set, std::optional<Point> reference_solution = std::nullopt,
                  std::string name = {});

  const Operator& op() const noexcept { return op_; }
  const FeasibleSet& set() const noexcept { return set_; }
  const std::optional<Point>& reference_solution() const noexcept { return reference_; }
  const std::string& name() const noexcept { return name_; }
  Index dimension() const noexcept { return set_.dimension(); }

 private:
  Operator op_;
  FeasibleSet set_;
  std::optional<Point> reference_;
  std::string name_;
};

/// P(base - alpha / max{1, |U(base)|} * U(base)). The normalization bounds the
/// step length by alpha no matter how fast U grows.
Point normalized_forward_step(const ProblemInstance& prob, const Point& base, double alpha);

/// |x - P(x - U(x))|; zero exactly on the solution set.
double natural_residual(const ProblemInstance& prob, const Point& x);

struct MonotonicityReport {
  double min_inner = 0.0;
  std::size_t paramono_witnesses = 0;
  std::size_t samples = 0;
};

inline constexpr double kParamonoInnerFloor = 1e-10;
inline constexpr double kParamonoOperatorFloor = 1e-6;

/// Sampling falsifier for (para)monotonicity on the set. Draws `samples`
/// seeded pairs (a, b) and records min <U(a)-U(b), a-b>, plus the number of
/// pairs with inner product below 1e-10 while |U(a)-U(b)| > 1e-6. A clean
/// report is evidence, not proof.
MonotonicityReport monotonicity_probe(const Operator& op, const FeasibleSet& set, std::size_t samples,
                                      std::uint64_t seed);

}  // namespace paravi
