#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace paravi::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 1,
  kExitValidation = 2,
  kExitDivergence = 3,
};

/// Everything a `run` or `validate` invocation needs. Flags and JSON config
/// keys share the same names (see README).
struct RunConfig {
  std::string problem = "paper-sec5";
  std::string mode = "discrete-inertial";
  /// powerlawA, powerlawB, powerlawD, custom, or empty for the mode default.
  std::string family;
  std::string schedule_file;

  double h = 2.5, s = 0.35, p = 0.5, u = 1.0;
  /// Family default when unset: 0.4 (A), 0.71 (B), 0.5 (D).
  std::optional<double> q;
  double deltaP = 1.0, thetaP = 1.0, lambdaP = 0.5;
  std::optional<double> omega;
  double tau = 0.75;

  double step = 1e-3;
  double t_end = 10.0;
  std::string method = "rk4";
  std::int64_t record_every = 1;

  std::vector<double> x0, x1, v0;
  /// auto, quarter_convention or explicit. auto picks explicit iff v0 is set.
  std::string velocity_mode = "auto";

  double tol = 1e-6;
  std::int64_t max_iters = 1'000'000;
  double stagnation_tol = 0.0;
  std::int64_t stagnation_window = 1;
  std::int64_t dense_until = 1000;
  std::int64_t log_every = 100;

  std::optional<double> c1, c2, q1, q2;
  std::optional<double> horizon;
  bool allow_inadmissible = false;
  bool no_validate = false;
  bool energy = false;

  std::uint64_t seed = 0;
  std::string out;
};

/// Applies one JSON document of settings. Throws ConfigurationError naming
/// the offending key.
void apply_config_json(RunConfig& cfg, const std::string& json_text);

std::string config_to_json(const RunConfig& cfg);

/// --out, else $PARAVI_OUTPUT_DIR, else ./paravi_out.
std::filesystem::path output_dir(const std::string& flag);

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// fig1, fig2 or fig3. Writes one CSV per curve and manifest.json.
int cmd_reproduce(const std::string& figure, const std::filesystem::path& outdir, std::uint64_t seed,
                  std::ostream& out, std::ostream& err);

/// (delta, theta, lambda) points of the fig3 grid; p = q = 0.5 throughout.
const std::vector<std::array<double, 3>>& fig3_grid();

/// Full command line without the program name, e.g. {"run", "--mode", ...}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paravi::app
