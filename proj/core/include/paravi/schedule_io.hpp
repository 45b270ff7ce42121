#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "paravi/schedule.hpp"

namespace paravi {

/// One tabulated row: (t or n, alpha0|beta0, alpha1|beta1, delta|xi, lambda|eta).
using ScheduleRow = std::array<double, 5>;

/// Linear interpolation between rows (strictly increasing t); values are held
/// constant past the last row. Rates use central differences.
ContinuousSchedule continuous_from_table(std::vector<ScheduleRow> rows);

/// Rows must be indexed n = 0, 1, 2, ... in order. The last row is held for
/// larger n.
DiscreteSchedule discrete_from_table(std::vector<ScheduleRow> rows);

/// Reads comma-separated rows; a non-numeric first line is treated as a header.
std::vector<ScheduleRow> read_schedule_csv(const std::filesystem::path& path);

}  // namespace paravi
