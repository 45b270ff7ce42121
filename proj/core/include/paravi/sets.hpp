#pragma once

#include <random>
#include <string_view>
#include <variant>

#include "paravi/types.hpp"

namespace paravi {

struct Ball {
  Point center;
  double radius;
};

struct Box {
  Point lower;
  Point upper;
};

/// {x >= 0 : sum(x) = scale}
struct Simplex {
  Index dim;
  double scale;
};

/// One-dimensional box [lo, hi].
struct Interval {
  double lo;
  double hi;
};

/// Closed convex set with an exact Euclidean projection.
class FeasibleSet {
 public:
  using Shape = std::variant<Ball, Box, Simplex, Interval>;

  static FeasibleSet ball(Point center, double radius);
  static FeasibleSet unit_ball(Index dim);
  static FeasibleSet box(Point lower, Point upper);
  static FeasibleSet simplex(Index dim, double scale = 1.0);
  static FeasibleSet interval(double lo, double hi);

  Index dimension() const noexcept;
  std::string_view kind() const noexcept;
  const Shape& shape() const noexcept { return shape_; }

  /// Nearest point of the set. Throws DefinitionError on dimension mismatch.
  Point project(const Point& x) const;

  /// Zero inside the set. Ball: max(0, |x-c| - r). Box and interval: largest
  /// componentwise excess. Simplex: max(max_i(-x_i), |sum(x) - scale|).
  double violation(const Point& x) const;

  bool contains(const Point& x, double tol = kMembershipTol) const { return violation(x) <= tol; }

  /// Draws a point of the set: uniform for ball, box and interval, flat
  /// Dirichlet for the simplex.
  Point sample(std::mt19937_64& rng) const;

 private:
  explicit FeasibleSet(Shape shape) : shape_(std::move(shape)) {}

  Shape shape_;
};

inline Point project(const FeasibleSet& set, const Point& x) { return set.project(x); }

/// Sorting-based projection onto {x >= 0 : sum(x) = scale}.
Point project_simplex(const Point& v, double scale);

}  // namespace paravi
