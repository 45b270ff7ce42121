#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "paravi/builtin.hpp"
#include "paravi/error.hpp"
#include "paravi/problem.hpp"

using namespace paravi;

namespace {

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

Point from(const oracle::Vec3& v) { return vec({v[0], v[1], v[2]}); }

std::vector<FeasibleSet> all_kinds() {
  return {FeasibleSet::unit_ball(3), FeasibleSet::ball(vec({1, -2, 0.5}), 2.5),
          FeasibleSet::box(vec({0, -1, 2}), vec({1, 1, 3})), FeasibleSet::simplex(4, 1.0),
          FeasibleSet::simplex(3, 2.5), FeasibleSet::interval(1, 2)};
}

Point random_point(std::mt19937_64& rng, Index d, double spread) {
  std::normal_distribution<double> n(0.0, spread);
  Point p(d);
  for (Index i = 0; i < d; ++i) p[i] = n(rng);
  return p;
}

}  // namespace

TEST(Operator, LinearMatchesPlainMatvec) {
  const auto op = Operator::linear(unit_ball_linear_matrix());
  std::mt19937_64 rng(7);
  for (int k = 0; k < 100; ++k) {
    const Point x = random_point(rng, 3, 2.0);
    const auto ref = oracle::matvec(oracle::kBenchmarkMatrix, {x[0], x[1], x[2]});
    EXPECT_LT((evaluate_operator(op, x) - from(ref)).norm(), 1e-14);
  }
}

TEST(Operator, ColumnsOfTheBenchmarkMatrix) {
  const auto op = Operator::linear(unit_ball_linear_matrix());
  EXPECT_EQ(op(vec({1, 0, 0})), vec({1, 3, 1}));
  EXPECT_EQ(op(vec({0, 0, 0})), vec({0, 0, 0}));
  EXPECT_EQ(op(vec({0, 1, 0})), vec({-2, 1, -2}));
}

TEST(Operator, RejectsBadInput) {
  const auto op = Operator::identity(3);
  EXPECT_THROW(op(vec({1, 2})), DefinitionError);
  EXPECT_THROW(Operator::linear(Matrix(2, 3)), DefinitionError);
  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = std::nan("");
  EXPECT_THROW(Operator::linear(bad), DefinitionError);

  const auto nan_op = Operator::callback(2, [](const Point& x) { return Point(x * std::nan("")); });
  EXPECT_THROW(nan_op(vec({1, 1})), EvaluationError);
  const auto short_op = Operator::callback(2, [](const Point&) { return vec({1}); });
  EXPECT_THROW(short_op(vec({1, 1})), EvaluationError);
  EXPECT_THROW(static_cast<void>(nan_op.matrix()), UnsupportedError);
}

TEST(Projection, Examples) {
  const auto ball = FeasibleSet::unit_ball(3);
  EXPECT_EQ(project(ball, vec({2, 0, 0})), vec({1, 0, 0}));
  EXPECT_EQ(project(ball, vec({0.3, 0.4, 0})), vec({0.3, 0.4, 0}));
  const auto box = FeasibleSet::box(vec({0, 0}), vec({1, 1}));
  EXPECT_EQ(project(box, vec({-1, 0.5})), vec({0, 0.5}));
  EXPECT_EQ(project(FeasibleSet::interval(1, 2), vec({0.25})), vec({1}));
  EXPECT_THROW(project(ball, vec({1, 2})), DefinitionError);
}

TEST(Projection, SimplexMatchesBisection) {
  std::mt19937_64 rng(11);
  for (double scale : {1.0, 0.3, 4.0}) {
    const auto set = FeasibleSet::simplex(6, scale);
    for (int k = 0; k < 300; ++k) {
      const Point x = random_point(rng, 6, 2.0);
      const auto ref = oracle::project_simplex_bisection(std::vector<double>(x.data(), x.data() + 6), scale);
      const Point p = project(set, x);
      for (Index i = 0; i < 6; ++i) EXPECT_NEAR(p[i], ref[static_cast<std::size_t>(i)], 1e-12);
    }
  }
}

TEST(Projection, RejectsDegenerateSets) {
  EXPECT_THROW(FeasibleSet::ball(vec({0, 0}), 0.0), DefinitionError);
  EXPECT_THROW(FeasibleSet::box(vec({1, 0}), vec({0, 1})), DefinitionError);
  EXPECT_THROW(FeasibleSet::simplex(3, -1.0), DefinitionError);
  EXPECT_THROW(FeasibleSet::interval(2, 1), DefinitionError);
}

TEST(Projection, IdempotentOnEverySetKind) {
  std::mt19937_64 rng(3);
  for (const auto& set : all_kinds()) {
    for (int k = 0; k < 1000; ++k) {
      const Point x = random_point(rng, set.dimension(), 3.0);
      const Point p = project(set, x);
      EXPECT_LE((project(set, p) - p).norm(), 1e-12) << set.kind();
      EXPECT_LE(set.violation(p), kMembershipTol) << set.kind();
    }
  }
}

TEST(Projection, FirmlyNonexpansive) {
  std::mt19937_64 rng(5);
  for (const auto& set : all_kinds()) {
    for (int k = 0; k < 1000; ++k) {
      const Point x = random_point(rng, set.dimension(), 3.0);
      const Point y = random_point(rng, set.dimension(), 3.0);
      const Point d = project(set, x) - project(set, y);
      EXPECT_LE(d.squaredNorm(), d.dot(x - y) + 1e-10) << set.kind();
    }
  }
}

TEST(Sets, SamplesStayInside) {
  std::mt19937_64 rng(9);
  for (const auto& set : all_kinds()) {
    for (int k = 0; k < 500; ++k) EXPECT_TRUE(set.contains(set.sample(rng))) << set.kind();
  }
}

TEST(ForwardStep, Examples) {
  const auto prob = unit_ball_linear();
  EXPECT_EQ(normalized_forward_step(prob, vec({0, 0, 0}), 1.0), vec({0, 0, 0}));

  const ProblemInstance id(Operator::identity(3), FeasibleSet::unit_ball(3));
  EXPECT_LT((normalized_forward_step(id, vec({0.5, 0, 0}), 0.25) - vec({0.375, 0, 0})).norm(), 1e-15);

  const Point got = normalized_forward_step(prob, vec({1, 0, 0}), 1.0);
  EXPECT_LT((got - from(oracle::forward_step_benchmark({1, 0, 0}, 1.0))).norm(), 1e-14);
  const Point expected = project(prob.set(), Point(vec({1, 0, 0}) - vec({1, 3, 1}) / std::sqrt(11.0)));
  EXPECT_LT((got - expected).norm(), 1e-14);
}

TEST(ForwardStep, ZeroStepIsProjectionAndNegativeIsRejected) {
  const auto prob = unit_ball_linear();
  EXPECT_EQ(normalized_forward_step(prob, vec({3, 0, 0}), 0.0), vec({1, 0, 0}));
  EXPECT_THROW(normalized_forward_step(prob, vec({0, 0, 0}), -1.0), DefinitionError);
}

TEST(ForwardStep, AlwaysLandsInTheSet) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> alpha(0.0, 5.0);
  const auto prob = unit_ball_linear();
  for (int k = 0; k < 1000; ++k) {
    const Point p = normalized_forward_step(prob, random_point(rng, 3, 3.0), alpha(rng));
    EXPECT_LE(prob.set().violation(p), 1e-12);
  }
}

TEST(NaturalResidual, Examples) {
  const auto prob = unit_ball_linear();
  EXPECT_EQ(natural_residual(prob, vec({0, 0, 0})), 0.0);
  EXPECT_EQ(natural_residual(identity_ball(4), Point::Zero(4)), 0.0);
  const double expected = (vec({1, 0, 0}) - vec({0, -3, -1}) / std::sqrt(10.0)).norm();
  EXPECT_NEAR(natural_residual(prob, vec({1, 0, 0})), expected, 1e-14);
}

TEST(NaturalResidual, VanishesAtBundledReferences) {
  for (const auto& id : builtin_ids()) {
    const auto prob = *builtin_problem(id);
    ASSERT_TRUE(prob.reference_solution().has_value());
    EXPECT_LE(natural_residual(prob, *prob.reference_solution()), 1e-10) << id;
  }
  EXPECT_FALSE(builtin_problem("nope").has_value());
}

TEST(ProblemInstance, ValidatesReference) {
  EXPECT_THROW(ProblemInstance(Operator::identity(2), FeasibleSet::unit_ball(3)), DefinitionError);
  EXPECT_THROW(ProblemInstance(Operator::identity(3), FeasibleSet::unit_ball(3), vec({2, 0, 0})), DefinitionError);
  EXPECT_THROW(ProblemInstance(Operator::identity(3), FeasibleSet::unit_ball(3), vec({0.5, 0, 0})), DefinitionError);
}

TEST(MonotonicityProbe, BenchmarkMatrixPasses) {
  const auto prob = unit_ball_linear();
  const auto r = monotonicity_probe(prob.op(), prob.set(), 1000, 42);
  EXPECT_GE(r.min_inner, -1e-10);
  EXPECT_EQ(r.paramono_witnesses, 0u);
  EXPECT_EQ(r.samples, 1000u);
}

TEST(MonotonicityProbe, IdentityPasses) {
  const auto r = monotonicity_probe(Operator::identity(3), FeasibleSet::unit_ball(3), 1000, 1);
  EXPECT_GE(r.min_inner, 0.0);
  EXPECT_EQ(r.paramono_witnesses, 0u);
}

TEST(MonotonicityProbe, RotationIsFlagged) {
  Matrix rot(2, 2);
  rot << 0, -1, 1, 0;
  const auto r = monotonicity_probe(Operator::linear(rot), FeasibleSet::unit_ball(2), 1000, 1);
  EXPECT_GT(r.paramono_witnesses, 0u);
}

TEST(MonotonicityProbe, DeterministicForSeed) {
  const auto prob = unit_ball_linear();
  const auto a = monotonicity_probe(prob.op(), prob.set(), 200, 99);
  const auto b = monotonicity_probe(prob.op(), prob.set(), 200, 99);
  EXPECT_EQ(a.min_inner, b.min_inner);
  EXPECT_THROW(monotonicity_probe(prob.op(), prob.set(), 0, 1), ConfigurationError);
}

TEST(BenchmarkMatrix, QuadraticFormIsNonnegative) {
  const Matrix a = unit_ball_linear_matrix();
  std::mt19937_64 rng(17);
  for (int k = 0; k < 10000; ++k) {
    const Point s = random_point(rng, 3, 1.0);
    EXPECT_GE(s.dot(a * s), -1e-12);
  }
}
