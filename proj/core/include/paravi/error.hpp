#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace paravi {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed problem data: dimension mismatch, empty set, non-square matrix.
class DefinitionError : public Error {
 public:
  using Error::Error;
};

/// An operator produced a non-finite value.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent run or integrator settings.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Operation not defined for this kind of object (e.g. family constants of
/// a custom schedule).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A schedule builder refused its parameters. `violated()` lists the
/// inequalities that do not hold, written as in the parameter box.
class ScheduleRejected : public Error {
 public:
  explicit ScheduleRejected(std::vector<std::string> violated)
      : Error(join(violated)), violated_(std::move(violated)) {}

  const std::vector<std::string>& violated() const noexcept { return violated_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out = "schedule parameters rejected:";
    for (const auto& s : items) out += " [" + s + "]";
    return out;
  }

  std::vector<std::string> violated_;
};

/// A coefficient condition failed at a concrete time or index.
class ConditionFailure : public Error {
 public:
  ConditionFailure(std::string condition, double location, const std::string& detail)
      : Error("condition '" + condition + "' fails at " + std::to_string(location) +
              (detail.empty() ? "" : ": " + detail)),
        condition_(std::move(condition)),
        location_(location) {}

  const std::string& condition() const noexcept { return condition_; }
  double location() const noexcept { return location_; }

 private:
  std::string condition_;
  double location_;
};

/// The state became non-finite. `last_valid()` is the last time (or
/// iteration index) at which every coordinate was finite.
class DivergenceError : public Error {
 public:
  DivergenceError(double last_valid, const std::string& what)
      : Error(what + " (last valid at " + std::to_string(last_valid) + ")"),
        last_valid_(last_valid) {}

  double last_valid() const noexcept { return last_valid_; }

 private:
  double last_valid_;
};

}  // namespace paravi
