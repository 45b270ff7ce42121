#include "paravi/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "paravi/compare.hpp"
#include "paravi/error.hpp"

namespace paravi {

namespace {

using nlohmann::json;

void append_point(std::string& line, const Point& p) {
  for (Index i = 0; i < p.size(); ++i) {
    line += ',';
    line += format_real(p[i]);
  }
}

std::string coord_header(const char* prefix, Index d) {
  std::string out;
  for (Index i = 1; i <= d; ++i) out += std::string(",") + prefix + "_" + std::to_string(i);
  return out;
}

json parse_config(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("config echo is not valid JSON: ") + e.what());
  }
}

}  // namespace

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string trajectory_csv(const ContinuousTrajectory& traj) {
  std::string out = "t" + coord_header("x", traj.dimension) + ",residual,feas_violation,speed\n";
  for (const auto& s : traj.samples) {
    std::string line = format_real(s.t);
    append_point(line, s.x);
    line += ',' + format_real(s.residual) + ',' + format_real(s.feas_violation) + ',' + format_real(s.speed) + '\n';
    out += line;
  }
  return out;
}

std::string run_csv(const RunResult& run) {
  std::string out = "n" + coord_header("z", run.dimension) + ",residual,feas_violation,step_norm\n";
  for (const auto& r : run.log) {
    std::string line = std::to_string(r.n);
    append_point(line, r.z);
    line += ',' + format_real(r.residual) + ',' + format_real(r.feas_violation) + ',' + format_real(r.step_norm) +
            '\n';
    out += line;
  }
  return out;
}

std::string comparison_csv(const ComparisonTable& table) {
  std::string out = "method,schedule,iters_to_tol,final_residual,wall_ms\n";
  for (const auto& row : table.rows) {
    std::string iters;
    if (row.error) {
      iters = "error";
    } else if (row.iters_to_tol) {
      iters = std::to_string(*row.iters_to_tol);
    } else {
      iters = "not-reached";
    }
    out += row.method + ',' + row.schedule + ',' + iters + ',' + format_real(row.final_residual) + ',' +
           format_real(row.wall_ms) + '\n';
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  if (ec) throw IoError("cannot create directory for " + path.string() + ": " + ec.message());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

void write_csv(const ContinuousTrajectory& traj, const std::filesystem::path& path) {
  write_text(path, trajectory_csv(traj));
}
void write_csv(const RunResult& run, const std::filesystem::path& path) { write_text(path, run_csv(run)); }
void write_csv(const ComparisonTable& table, const std::filesystem::path& path) {
  write_text(path, comparison_csv(table));
}

bool operator==(const RunSummary& a, const RunSummary& b) {
  return a.algorithm == b.algorithm && a.stop_reason == b.stop_reason && a.iterations == b.iterations &&
         a.final_residual == b.final_residual && a.final_point == b.final_point && a.warnings == b.warnings &&
         parse_config(a.config_json) == parse_config(b.config_json);
}

RunSummary summarize(const RunResult& run, std::string config_json) {
  RunSummary s;
  s.algorithm = run.algorithm;
  s.stop_reason = std::string(to_string(run.stop_reason));
  s.iterations = run.final_index;
  s.final_residual = run.final_residual;
  s.final_point.assign(run.final.data(), run.final.data() + run.final.size());
  s.warnings = run.warnings;
  s.config_json = std::move(config_json);
  return s;
}

RunSummary summarize(const ContinuousTrajectory& traj, std::string config_json) {
  RunSummary s;
  s.algorithm = traj.kind;
  s.stop_reason = "t_end";
  s.warnings = traj.warnings;
  s.config_json = std::move(config_json);
  if (!traj.samples.empty()) {
    const auto& last = traj.samples.back();
    s.iterations = static_cast<std::int64_t>(
        std::llround((last.t - traj.samples.front().t) / (traj.step_used > 0 ? traj.step_used : 1.0)));
    s.final_residual = last.residual;
    s.final_point.assign(last.x.data(), last.x.data() + last.x.size());
  }
  return s;
}

std::string summary_to_json(const RunSummary& s) {
  json j;
  j["algorithm"] = s.algorithm;
  j["stop_reason"] = s.stop_reason;
  j["iterations"] = s.iterations;
  j["final_residual"] = s.final_residual;
  j["final"] = s.final_point;
  j["warnings"] = s.warnings;
  j["config"] = parse_config(s.config_json);
  return j.dump(2) + "\n";
}

RunSummary summary_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunSummary s;
    s.algorithm = j.at("algorithm").get<std::string>();
    s.stop_reason = j.at("stop_reason").get<std::string>();
    s.iterations = j.at("iterations").get<std::int64_t>();
    s.final_residual = j.at("final_residual").get<double>();
    s.final_point = j.at("final").get<std::vector<double>>();
    s.warnings = j.value("warnings", std::vector<std::string>{});
    s.config_json = j.value("config", json::object()).dump();
    return s;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed summary JSON: ") + e.what());
  }
}

void write_summary_json(const RunSummary& s, const std::filesystem::path& path) {
  write_text(path, summary_to_json(s));
}

RunSummary read_summary_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return summary_from_json(ss.str());
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace paravi
