#pragma once

#include <Eigen/Dense>

namespace paravi {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Membership tolerance for sets with an exact projection.
inline constexpr double kMembershipTol = 1e-12;

inline bool all_finite(const Point& x) { return x.allFinite(); }

}  // namespace paravi
