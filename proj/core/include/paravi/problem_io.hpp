#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "paravi/problem.hpp"

namespace paravi {

/// Parses a problem document:
///
///   { "dimension": 3,
///     "operator": { "kind": "linear", "matrix": [...] },   // or "identity"
///     "set": { "kind": "ball", "params": { "center": [...], "radius": 1 } },
///     "reference_solution": [...] }                         // optional
///
/// The matrix is row-major, either flat (d*d numbers) or nested rows. Set
/// kinds and params: ball {center?, radius}, box {lower, upper},
/// simplex {scale}, interval {lo, hi}.
ProblemInstance parse_problem(std::string_view json_text);
ProblemInstance load_problem(const std::filesystem::path& path);

/// Inverse of parse_problem for linear operators.
std::string problem_to_json(const ProblemInstance& prob);

}  // namespace paravi
