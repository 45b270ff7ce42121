#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "paravi/builtin.hpp"
#include "paravi/error.hpp"
#include "paravi/problem_io.hpp"

using namespace paravi;

TEST(ProblemIo, ParsesFlatMatrixOnBall) {
  const auto prob = parse_problem(R"({
    "dimension": 3,
    "operator": {"kind": "linear", "matrix": [1,-2,1, 3,1,3, 1,-2,1]},
    "set": {"kind": "ball", "params": {"radius": 1}},
    "reference_solution": [0,0,0]
  })");
  EXPECT_EQ(prob.dimension(), 3);
  EXPECT_EQ(prob.op().matrix(), unit_ball_linear_matrix());
  EXPECT_EQ(prob.set().kind(), "ball");
  ASSERT_TRUE(prob.reference_solution());
}

TEST(ProblemIo, ParsesNestedMatrixAndOtherSets) {
  const auto box = parse_problem(R"({"dimension": 2, "operator": {"kind": "linear", "matrix": [[2,0],[0,1]]},
    "set": {"kind": "box", "params": {"lower": [0,0], "upper": [1,1]}}})");
  EXPECT_EQ(box.set().kind(), "box");
  EXPECT_EQ(box.op().matrix()(0, 0), 2.0);

  const auto simplex = parse_problem(R"({"dimension": 4, "operator": {"kind": "identity"},
    "set": {"kind": "simplex", "params": {"scale": 2}}})");
  EXPECT_EQ(simplex.set().kind(), "simplex");

  const auto interval = parse_problem(R"({"dimension": 1, "operator": {"kind": "identity"},
    "set": {"kind": "interval", "params": {"lo": 0, "hi": 3}}, "reference_solution": [0]})");
  EXPECT_EQ(interval.set().kind(), "interval");
}

TEST(ProblemIo, RoundTrip) {
  const auto prob = unit_ball_linear();
  const auto again = parse_problem(problem_to_json(prob));
  EXPECT_EQ(again.op().matrix(), prob.op().matrix());
  EXPECT_EQ(again.set().kind(), prob.set().kind());
  EXPECT_EQ(*again.reference_solution(), *prob.reference_solution());
  EXPECT_EQ(again.name(), prob.name());
}

TEST(ProblemIo, ReportsMalformedDocuments) {
  EXPECT_THROW(parse_problem("not json"), DefinitionError);
  EXPECT_THROW(parse_problem(R"({"operator": {"kind": "identity"}})"), DefinitionError);
  EXPECT_THROW(parse_problem(R"({"dimension": 2, "operator": {"kind": "linear", "matrix": [1,2,3]},
    "set": {"kind": "ball", "params": {"radius": 1}}})"),
               DefinitionError);
  EXPECT_THROW(parse_problem(R"({"dimension": 2, "operator": {"kind": "identity"},
    "set": {"kind": "torus"}})"),
               DefinitionError);
  EXPECT_THROW(parse_problem(R"({"dimension": 2, "operator": {"kind": "identity"},
    "set": {"kind": "ball", "params": {"radius": "one"}}})"),
               DefinitionError);
}

TEST(ProblemIo, LoadFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "paravi_problem_io_test.json";
  {
    std::ofstream out(path);
    out << problem_to_json(identity_ball(2));
  }
  EXPECT_EQ(load_problem(path).dimension(), 2);
  std::filesystem::remove(path);
  EXPECT_THROW(load_problem(path), IoError);
}
