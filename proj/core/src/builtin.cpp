#include "paravi/builtin.hpp"

namespace paravi {

Matrix unit_ball_linear_matrix() {
  Matrix a(3, 3);
  a << 1, -2, 1,
       3, 1, 3,
       1, -2, 1;
  return a;
}

ProblemInstance unit_ball_linear() {
  return ProblemInstance(Operator::linear(unit_ball_linear_matrix()), FeasibleSet::unit_ball(3),
                         Point::Zero(3), std::string(kBuiltinUnitBall));
}

ProblemInstance identity_ball(Index dim) {
  return ProblemInstance(Operator::identity(dim), FeasibleSet::unit_ball(dim), Point::Zero(dim),
                         std::string(kBuiltinIdentity));
}

ProblemInstance remark_instance() {
  return ProblemInstance(Operator::constant(Point::Constant(1, 1.0)), FeasibleSet::interval(1.0, 2.0),
                         Point::Constant(1, kRemarkTarget), std::string(kBuiltinRemark));
}

ContinuousSchedule remark_schedule() {
  auto s = ContinuousSchedule::constant(1.0, 2.0, 2.0, 0.0);
  s.label = "remark";
  return s;
}

std::optional<ProblemInstance> builtin_problem(std::string_view id) {
  if (id == kBuiltinUnitBall) return unit_ball_linear();
  if (id == kBuiltinRemark) return remark_instance();
  if (id == kBuiltinIdentity) return identity_ball(3);
  return std::nullopt;
}

std::vector<std::string> builtin_ids() {
  return {std::string(kBuiltinUnitBall), std::string(kBuiltinRemark), std::string(kBuiltinIdentity)};
}

}  // namespace paravi
