#include "paravi/operator.hpp"

#include <string>

#include "paravi/error.hpp"

namespace paravi {

Operator Operator::linear(Matrix a) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw DefinitionError("linear operator needs a non-empty square matrix, got " +
                          std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (!a.allFinite()) throw DefinitionError("linear operator matrix has non-finite entries");
  return Operator(Linear{std::move(a)}, "linear");
}

Operator Operator::identity(Index dim) {
  if (dim < 1) throw DefinitionError("identity operator needs dimension >= 1");
  Operator op = linear(Matrix::Identity(dim, dim));
  op.name_ = "identity";
  return op;
}

Operator Operator::callback(Index dim, Map f, std::string name) {
  if (dim < 1) throw DefinitionError("callback operator needs dimension >= 1");
  if (!f) throw DefinitionError("callback operator needs a callable");
  return Operator(Callback{dim, std::move(f)}, std::move(name));
}

Operator Operator::constant(Point value) {
  if (value.size() < 1 || !value.allFinite()) {
    throw DefinitionError("constant operator needs a finite, non-empty value");
  }
  const Index dim = value.size();
  return callback(dim, [v = std::move(value)](const Point&) { return v; }, "constant");
}

Index Operator::dimension() const noexcept {
  return std::visit(
      [](const auto& impl) -> Index {
        using T = std::decay_t<decltype(impl)>;
        if constexpr (std::is_same_v<T, Linear>) {
          return impl.a.rows();
        } else {
          return impl.dim;
        }
      },
      impl_);
}

const Matrix& Operator::matrix() const {
  if (const auto* lin = std::get_if<Linear>(&impl_)) return lin->a;
  throw UnsupportedError("operator '" + name_ + "' is not linear");
}

Point Operator::operator()(const Point& x) const {
  const Index d = dimension();
  if (x.size() != d) {
    throw DefinitionError("operator of dimension " + std::to_string(d) +
                          " applied to a point of dimension " + std::to_string(x.size()));
  }
  if (const auto* lin = std::get_if<Linear>(&impl_)) return lin->a * x;

  Point out = std::get<Callback>(impl_).f(x);
  if (out.size() != d) {
    throw EvaluationError("operator '" + name_ + "' returned a vector of dimension " +
                          std::to_string(out.size()));
  }
  if (!out.allFinite()) throw EvaluationError("operator '" + name_ + "' returned non-finite values");
  return out;
}

}  // namespace paravi
