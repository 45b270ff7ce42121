#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "app.hpp"

namespace fs = std::filesystem;
using paravi::app::run_cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("paravi_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<double>> read_rows(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST(Cli, DiscreteInertialExample) {
  const auto dir = scratch("inertial");
  const auto r = call({"run", "--problem", "paper-sec5", "--mode", "discrete-inertial", "--family", "powerlawD", "--p",
                       "0.5", "--q", "0.5", "--deltaP", "1", "--thetaP", "1", "--lambdaP", "0.5", "--tol", "1e-3",
                       "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  ASSERT_TRUE(fs::exists(dir / "discrete-inertial.csv"));
  EXPECT_EQ(slurp(dir / "discrete-inertial.csv").rfind("n,z_1,z_2,z_3,residual,feas_violation,step_norm\n", 0), 0u);
  const auto summary = nlohmann::json::parse(slurp(dir / "summary.json"));
  EXPECT_EQ(summary["stop_reason"], "tol");
  EXPECT_LE(summary["final_residual"].get<double>(), 1e-3);
  EXPECT_EQ(summary["config"]["deltaP"], 1.0);
  fs::remove_all(dir);
}

TEST(Cli, RemarkExampleLeavesTheInterval) {
  const auto dir = scratch("remark");
  const auto r = call({"run", "--problem", "remark-counterexample", "--mode", "continuous-second-order", "--t-end",
                       "4.8", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = read_rows(dir / "continuous-second-order.csv");
  ASSERT_FALSE(rows.empty());
  EXPECT_DOUBLE_EQ(rows.back()[0], 4.8);
  bool outside = false;
  for (const auto& row : rows) {
    // t, x_1, residual, feas_violation, speed
    if (row[0] > std::numbers::pi && row[0] < 1.5 * std::numbers::pi && row[3] > 0) outside = true;
  }
  EXPECT_TRUE(outside);
  fs::remove_all(dir);
}

TEST(Cli, ValidateExampleNamesTheViolation) {
  const auto r = call({"validate", "--family", "powerlawA", "--h", "2", "--s", "0.3", "--p", "0.5", "--q", "0.4"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("h>2"), std::string::npos) << r.err;
}

TEST(Cli, ValidateAdmissibleFamilies) {
  auto r = call({"validate", "--family", "powerlawA", "--h", "2.001", "--s", "0.3", "--p", "0.5", "--q", "0.4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("satisfied"), std::string::npos);
  r = call({"validate", "--family", "powerlawD", "--p", "0.5", "--q", "0.5", "--deltaP", "1", "--thetaP", "1",
            "--lambdaP", "0.5", "--omega", "5"});
  EXPECT_EQ(r.code, 0) << r.err << r.out;
  r = call({"validate", "--family", "powerlawB", "--h", "1.5", "--s", "0.35", "--q", "0.71", "--u", "1"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, ConfigErrorsNameTheKey) {
  auto r = call({"run", "--mode", "discrete-inertial", "--p", "abc"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("'p'"), std::string::npos) << r.err;

  const auto dir = scratch("config");
  fs::create_directories(dir);
  std::ofstream(dir / "bad.json") << R"({"mode": "discrete-direct", "bogus_key": 1})";
  r = call({"run", "--config", (dir / "bad.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("bogus_key"), std::string::npos) << r.err;

  r = call({"run", "--mode", "nonsense", "--out", dir.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("mode"), std::string::npos);

  r = call({"run", "--problem", (dir / "missing.json").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(call({"run", "--no-such-flag"}).code, 1);
  EXPECT_EQ(call({}).code, 1);
  fs::remove_all(dir);
}

TEST(Cli, JsonConfigMatchesFlags) {
  const auto dir = scratch("json");
  fs::create_directories(dir);
  std::ofstream(dir / "cfg.json") << R"({"algorithm": "direct", "tau": 0.75, "z0": [1, 0, 0], "tol": 1e-3,
                                         "max_iters": 100000, "out": ")"
                                  << (dir / "a").string() << R"("})";
  auto r = call({"run", "--config", (dir / "cfg.json").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  r = call({"run", "--mode", "discrete-direct", "--tau", "0.75", "--x0", "1,0,0", "--tol", "1e-3", "--max-iters",
            "100000", "--out", (dir / "b").string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(slurp(dir / "a" / "discrete-direct.csv"), slurp(dir / "b" / "discrete-direct.csv"));
  fs::remove_all(dir);
}

TEST(Cli, ContinuousModes) {
  const auto dir = scratch("continuous");
  for (const std::string mode : {"continuous-second-order", "continuous-coupled", "continuous-first-order"}) {
    const auto r = call({"run", "--mode", mode, "--t-end", "2", "--step", "1e-2", "--energy", "--out", dir.string()});
    EXPECT_EQ(r.code, 0) << mode << r.err;
    EXPECT_TRUE(fs::exists(dir / (mode + ".csv"))) << mode;
  }
  EXPECT_EQ(slurp(dir / "energy.csv").substr(0, 10), "t,v_ref,b\n");
  const auto r = call({"run", "--mode", "continuous-coupled", "--v0", "0,0,0", "--out", dir.string()});
  EXPECT_EQ(r.code, 1);
  fs::remove_all(dir);
}

TEST(Cli, InadmissibleScheduleNeedsOverride) {
  const auto dir = scratch("override");
  fs::create_directories(dir);
  std::ofstream(dir / "table.csv") << "n,beta0,beta1,xi,eta\n0,0.1,1,0.5,0.5\n";
  auto r = call({"run", "--mode", "discrete-inertial", "--family", "custom", "--schedule-file",
                 (dir / "table.csv").string(), "--max-iters", "20", "--out", dir.string()});
  EXPECT_EQ(r.code, 2) << r.err;
  r = call({"run", "--mode", "discrete-inertial", "--family", "custom", "--schedule-file",
            (dir / "table.csv").string(), "--max-iters", "20", "--allow-inadmissible", "--out", dir.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, DivergenceExitCode) {
  const auto dir = scratch("diverge");
  fs::create_directories(dir);
  std::ofstream(dir / "table.csv") << "0,0.1,1,0.5,0\n1,0.1,1,0.5,0\n2,0.1,1e308,0.5,0\n";
  const auto r = call({"run", "--mode", "discrete-inertial", "--family", "custom", "--schedule-file",
                       (dir / "table.csv").string(), "--max-iters", "50", "--allow-inadmissible", "--out",
                       dir.string()});
  EXPECT_EQ(r.code, 3) << r.err;
  fs::remove_all(dir);
}

TEST(Cli, CompareMode) {
  const auto dir = scratch("compare");
  const auto r = call({"run", "--mode", "compare", "--tol", "1e-3", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto table = slurp(dir / "comparison.csv");
  EXPECT_NE(table.find("inertial"), std::string::npos);
  EXPECT_NE(table.find("direct"), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, OutputDirFromEnvironment) {
  const auto dir = scratch("env");
  ::setenv("PARAVI_OUTPUT_DIR", dir.string().c_str(), 1);
  const auto r = call({"run", "--mode", "discrete-direct", "--max-iters", "10"});
  ::unsetenv("PARAVI_OUTPUT_DIR");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "discrete-direct.csv"));
  fs::remove_all(dir);
}

TEST(Reproduce, Fig1CurvesVaryH) {
  const auto dir = scratch("fig1");
  const auto r = call({"reproduce", "fig1", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = nlohmann::json::parse(slurp(dir / "fig1" / "manifest.json"));
  ASSERT_GE(m["curves"].size(), 2u);
  std::set<double> hs;
  for (const auto& c : m["curves"]) {
    EXPECT_EQ(c["config"]["u"], 1.0);
    EXPECT_EQ(c["config"]["s"], 0.35);
    EXPECT_EQ(c["config"]["q"], 0.71);
    hs.insert(c["config"]["h"].get<double>());
    EXPECT_TRUE(fs::exists(dir / "fig1" / c["file"].get<std::string>()));
  }
  EXPECT_EQ(hs.size(), m["curves"].size());
  fs::remove_all(dir);
}

TEST(Reproduce, Fig3HorizonsMatch) {
  const auto dir = scratch("fig3");
  const auto r = call({"reproduce", "fig3", "--out", dir.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = nlohmann::json::parse(slurp(dir / "fig3" / "manifest.json"));
  std::set<std::string> kinds;
  std::set<std::int64_t> horizons;
  for (const auto& c : m["curves"]) {
    kinds.insert(c["kind"].get<std::string>());
    horizons.insert(c["horizon"].get<std::int64_t>());
    if (c["kind"] == "inertial") {
      EXPECT_EQ(c["config"]["p"], 0.5);
      EXPECT_EQ(c["config"]["q"], 0.5);
    }
  }
  EXPECT_EQ(kinds, (std::set<std::string>{"direct", "inertial"}));
  EXPECT_EQ(horizons.size(), 1u);
  EXPECT_TRUE(fs::exists(dir / "fig3" / "comparison.csv"));
  fs::remove_all(dir);
}

TEST(Reproduce, UnknownFigure) {
  const auto r = call({"reproduce", "fig9", "--out", scratch("fig9").string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("fig9"), std::string::npos);
}
