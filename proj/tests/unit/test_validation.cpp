#include <gtest/gtest.h>

#include <cmath>

#include "paravi/builtin.hpp"
#include "paravi/error.hpp"
#include "paravi/validation.hpp"

using namespace paravi;

namespace {

ConditionStatus status_of(const ValidationReport& r, std::string_view id) {
  const auto* c = r.find(id);
  EXPECT_NE(c, nullptr) << id;
  return c ? c->status : ConditionStatus::Fail;
}

DiscreteSchedule constant_discrete(double b0, double b1, double xi, double eta) {
  DiscreteSchedule d;
  d.beta0 = [b0](std::int64_t) { return b0; };
  d.beta1 = [b1](std::int64_t) { return b1; };
  d.xi = [xi](std::int64_t) { return xi; };
  d.eta = [eta](std::int64_t) { return eta; };
  return d;
}

}  // namespace

TEST(ValidateContinuous, PowerLawBWithItsConstants) {
  const auto s = build_continuous_powerlawB(2.5, 0.35, 0.71, 1);
  const auto r = validate_continuous(s, 2.5, 2.5, 1e3);
  EXPECT_TRUE(r.satisfied) << ::testing::PrintToString(r.failures());
  EXPECT_EQ(status_of(r, cond::kStepSquareIntegrable), ConditionStatus::AnalyticPass);
  EXPECT_EQ(status_of(r, cond::kStepNotIntegrable), ConditionStatus::AnalyticPass);
  EXPECT_EQ(status_of(r, cond::kDampingMonotone), ConditionStatus::AnalyticPass);
  EXPECT_EQ(status_of(r, cond::kSmoothingInside), ConditionStatus::AnalyticPass);
  EXPECT_EQ(status_of(r, cond::kFeasibleDamping), ConditionStatus::NumericPass);
  EXPECT_DOUBLE_EQ(r.find(cond::kFeasibleDamping)->location, 1e3);
}

TEST(ValidateContinuous, PowerLawAWithItsConstants) {
  const auto s = build_continuous_powerlawA(3, 0.3, 0.5, 0.4);
  const auto r = validate_continuous(s, 6, 2, 1e3);
  EXPECT_TRUE(r.satisfied) << ::testing::PrintToString(r.failures());
  const auto& k = std::get<ContinuousConstants>(*r.constants);
  EXPECT_EQ(k.c1, 6.0);
  EXPECT_EQ(k.c2, 2.0);
}

TEST(ValidateContinuous, RemarkScheduleFailsFeasibleDamping) {
  const auto r = validate_continuous(ContinuousSchedule::constant(1, 2, 2, 0), 1, 1, 10);
  EXPECT_FALSE(r.satisfied);
  const auto* c = r.find(cond::kFeasibleDamping);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ConditionStatus::Fail);
  EXPECT_EQ(c->location, 0.0);
}

TEST(ValidateContinuous, FamiliesPassTheirOwnConstants) {
  for (const auto& s : {build_continuous_powerlawA(3, 0.3, 0.5, 0.4), build_continuous_powerlawA(2.2, 0.1, 0.9, 0.08),
                        build_continuous_powerlawB(2.5, 0.35, 0.71, 1), build_continuous_powerlawB(4, 0.2, 1.0, 1)}) {
    const auto k = continuous_family_constants(s);
    const auto r = validate_continuous(s, k.c1, k.c2, 1e4);
    EXPECT_TRUE(r.satisfied) << s.label << ::testing::PrintToString(r.failures());
  }
}

TEST(ValidateContinuous, CustomScheduleGetsOnlyNumericEvidence) {
  auto s = ContinuousSchedule::constant(1, 3, 1, 0.5);
  s.dalpha1 = nullptr;
  const auto r = validate_continuous(s, 1, 1, 100, 101);
  EXPECT_EQ(status_of(r, cond::kStepSquareIntegrable), ConditionStatus::NumericPass);
  EXPECT_NE(r.find(cond::kStepSquareIntegrable)->detail.find("finite-horizon only"), std::string::npos);
  EXPECT_EQ(status_of(r, cond::kSmoothingInside), ConditionStatus::Deferred);
  EXPECT_EQ(status_of(r, cond::kLambdaBounded), ConditionStatus::NumericPass);
  EXPECT_TRUE(r.satisfied);
}

TEST(ValidateContinuous, MarginFailureIsLocated) {
  // alpha1 shrinks below C1/2 after t = 3.
  ContinuousSchedule s;
  s.alpha0 = [](double) { return 1.0; };
  s.alpha1 = [](double t) { return t < 3 ? 4.0 : 2.5; };
  s.delta = [](double) { return 0.5; };
  s.lambda = [](double) { return 0.0; };
  const auto r = validate_continuous(s, 6, 1, 10, 11);
  const auto* c = r.find(cond::kDampingMargin);
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, ConditionStatus::Fail);
  EXPECT_EQ(c->location, 3.0);
}

TEST(ValidateContinuous, BadRequestThrows) {
  const auto s = build_continuous_powerlawB(2.5, 0.35, 0.71, 1);
  EXPECT_THROW(validate_continuous(s, 1, 1, 0.0), ConfigurationError);
  EXPECT_THROW(validate_continuous(s, 1, 1, 10, 1), ConfigurationError);
  EXPECT_FALSE(validate_continuous(s, -1, 1, 10).satisfied);
}

TEST(ValidateContinuous, FailurePersistsWithLongerHorizon) {
  ContinuousSchedule s = ContinuousSchedule::constant(1, 3, 1, 0);
  s.delta = [](double t) { return t < 5 ? 1.0 : 3.0; };
  s.ddelta = nullptr;
  const auto short_run = validate_continuous(s, 1, 1, 10, 101);
  const auto long_run = validate_continuous(s, 1, 1, 100, 1001);
  EXPECT_FALSE(short_run.satisfied);
  EXPECT_FALSE(long_run.satisfied);
  EXPECT_EQ(short_run.find(cond::kFeasibleDamping)->location, long_run.find(cond::kFeasibleDamping)->location);
}

TEST(ValidateDiscrete, PowerLawDWithItsConstants) {
  const auto d = build_discrete_powerlawD(0.5, 0.5, 1, 1, 0.5, 5.0);
  const auto r = validate_discrete(d, 0.8, 1.0 - 2.0 / std::sqrt(5.0), 1'000'000);
  EXPECT_TRUE(r.satisfied) << ::testing::PrintToString(r.failures());
  EXPECT_EQ(status_of(r, cond::kSumSquare), ConditionStatus::AnalyticPass);
  EXPECT_EQ(status_of(r, cond::kSumDiverges), ConditionStatus::AnalyticPass);
  EXPECT_EQ(status_of(r, cond::kContraction), ConditionStatus::NumericPass);
}

TEST(ValidateDiscrete, PositiveEtaFails) {
  const auto r = validate_discrete(constant_discrete(0.1, 1.0, 0.5, 0.5), 0.5, 0.5, 100);
  EXPECT_EQ(status_of(r, cond::kEtaRange), ConditionStatus::Fail);
  EXPECT_EQ(r.find(cond::kEtaRange)->location, 0.0);
  EXPECT_FALSE(r.satisfied);
}

TEST(ValidateDiscrete, CoefficientSumAboveTwoFails) {
  const auto r = validate_discrete(constant_discrete(0.1, 1.5, 0.8, 0.0), 0.5, 0.5, 100);
  EXPECT_EQ(status_of(r, cond::kConvexCoefficients), ConditionStatus::Fail);
}

TEST(ValidateDiscrete, CustomSumsCarryCaveat) {
  const auto r = validate_discrete(constant_discrete(0.0, 1.0, 0.1, 0.0), 0.5, 0.5, 100);
  EXPECT_NE(r.find(cond::kSumDiverges)->detail.find("finite-horizon only"), std::string::npos);
  EXPECT_EQ(status_of(r, cond::kSumDiverges), ConditionStatus::NumericPass);
}

TEST(ValidateDiscrete, ConstantsOutOfRangeFail) {
  const auto d = build_discrete_powerlawD(0.5, 0.5, 1, 1, 0.5);
  EXPECT_EQ(status_of(validate_discrete(d, 0.8, 1.5, 10), cond::kConstantsRangeQ), ConditionStatus::Fail);
  EXPECT_EQ(status_of(validate_discrete(d, -0.1, 0.1, 10), cond::kConstantsRangeQ), ConditionStatus::Fail);
  EXPECT_THROW(validate_discrete(d, 0.8, 0.1, 1), ConfigurationError);
}

TEST(ValidateDiscrete, FamiliesPassTheirOwnConstants) {
  for (const auto& d : {build_discrete_powerlawD(0.5, 0.5, 1, 1, 0.5), build_discrete_powerlawD(0.4, 0.5, 1, 1, 0.5),
                        build_discrete_powerlawD(0.6, 0.3, 1, 1, 0.5), build_discrete_powerlawD(0.5, 0.4, 0.5, 0.5, 1),
                        build_discrete_powerlawD(0.3, 0.6, 2, 1, 1)}) {
    const auto q = discrete_family_constants(d);
    const auto r = validate_discrete(d, q.q1, q.q2, 10000);
    EXPECT_TRUE(r.satisfied) << ::testing::PrintToString(r.failures());
  }
}

TEST(ValidateDiscrete, FailurePersistsWithLongerHorizon) {
  DiscreteSchedule d = constant_discrete(0.1, 1.0, 0.5, 0.0);
  d.eta = [](std::int64_t n) { return n < 50 ? -0.5 : 0.25; };
  const auto a = validate_discrete(d, 0.5, 0.5, 100);
  const auto b = validate_discrete(d, 0.5, 0.5, 1000);
  EXPECT_EQ(a.find(cond::kEtaRange)->location, 50.0);
  EXPECT_EQ(b.find(cond::kEtaRange)->location, 50.0);
}

TEST(ValidationReport, SatisfiedIffNoFailure) {
  const auto r = validate_continuous(remark_schedule(), 1, 1, 10);
  EXPECT_EQ(r.satisfied, r.failures().empty());
  EXPECT_EQ(to_string(ConditionStatus::Deferred), "deferred");
}
