#pragma once

#include <functional>
#include <string>
#include <variant>

#include "paravi/types.hpp"

namespace paravi {

/// A map U: R^d -> R^d. Either a dense matrix (U(x) = A x) or an arbitrary
/// callback. Callbacks must be deterministic and reentrant; concurrent runs
/// share the same Operator.
class Operator {
 public:
  using Map = std::function<Point(const Point&)>;

  static Operator linear(Matrix a);
  static Operator identity(Index dim);
  static Operator callback(Index dim, Map f, std::string name = "callback");
  /// U(x) = value for every x.
  static Operator constant(Point value);

  Index dimension() const noexcept;
  bool is_linear() const noexcept { return std::holds_alternative<Linear>(impl_); }
  /// Throws UnsupportedError for callback operators.
  const Matrix& matrix() const;
  const std::string& name() const noexcept { return name_; }

  /// Throws DefinitionError on a dimension mismatch and EvaluationError when
  /// a callback returns non-finite or wrongly sized output.
  Point operator()(const Point& x) const;

 private:
  struct Linear {
    Matrix a;
  };
  struct Callback {
    Index dim;
    Map f;
  };

  Operator(std::variant<Linear, Callback> impl, std::string name)
      : impl_(std::move(impl)), name_(std::move(name)) {}

  std::variant<Linear, Callback> impl_;
  std::string name_;
};

inline Point evaluate_operator(const Operator& op, const Point& x) { return op(x); }

}  // namespace paravi
