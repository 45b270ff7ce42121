#include "app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "paravi/builtin.hpp"
#include "paravi/compare.hpp"
#include "paravi/continuous.hpp"
#include "paravi/diagnostics.hpp"
#include "paravi/discrete.hpp"
#include "paravi/error.hpp"
#include "paravi/io.hpp"
#include "paravi/problem_io.hpp"
#include "paravi/schedule_io.hpp"
#include "paravi/validation.hpp"

namespace paravi::app {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void bad_key(const std::string& key, const std::string& why) {
  throw ConfigurationError("key '" + key + "': " + why);
}

double as_number(const json& j, const std::string& key) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto& text = j.get_ref<const std::string&>();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (!text.empty() && end == text.c_str() + text.size() && std::isfinite(v)) return v;
  }
  bad_key(key, "expected a number, got " + j.dump());
}

std::int64_t as_count(const json& j, const std::string& key) {
  const double v = as_number(j, key);
  if (v < 0 || v != std::floor(v) || v > 9e15) bad_key(key, "expected a nonnegative integer, got " + j.dump());
  return static_cast<std::int64_t>(v);
}

bool as_bool(const json& j, const std::string& key) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_string()) {
    const auto& t = j.get_ref<const std::string&>();
    if (t == "true" || t == "1") return true;
    if (t == "false" || t == "0") return false;
  }
  bad_key(key, "expected true or false, got " + j.dump());
}

std::string as_string(const json& j, const std::string& key) {
  if (!j.is_string()) bad_key(key, "expected a string, got " + j.dump());
  return j.get<std::string>();
}

std::vector<double> as_vector(const json& j, const std::string& key) {
  std::vector<double> out;
  if (j.is_array()) {
    for (const auto& e : j) out.push_back(as_number(e, key));
    return out;
  }
  if (j.is_number()) return {j.get<double>()};
  if (j.is_string()) {
    std::stringstream ss(j.get<std::string>());
    for (std::string item; std::getline(ss, item, ',');) out.push_back(as_number(json(item), key));
    return out;
  }
  bad_key(key, "expected a list of numbers, got " + j.dump());
}

json opt(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

struct Binding {
  std::string key;
  std::string help;
  bool is_flag = false;
  std::function<void(RunConfig&, const json&)> set;
  std::function<json(const RunConfig&)> get;
};

#define PARAVI_NUM(name, field, text)                                                  \
  Binding {                                                                            \
    name, text, false, [](RunConfig& c, const json& j) { c.field = as_number(j, name); }, \
        [](const RunConfig& c) { return json(c.field); }                               \
  }
#define PARAVI_OPTNUM(name, field, text)                                               \
  Binding {                                                                            \
    name, text, false, [](RunConfig& c, const json& j) { c.field = as_number(j, name); }, \
        [](const RunConfig& c) { return opt(c.field); }                                \
  }
#define PARAVI_COUNT(name, field, text)                                                \
  Binding {                                                                            \
    name, text, false, [](RunConfig& c, const json& j) { c.field = as_count(j, name); },  \
        [](const RunConfig& c) { return json(c.field); }                               \
  }
#define PARAVI_STR(name, field, text)                                                  \
  Binding {                                                                            \
    name, text, false, [](RunConfig& c, const json& j) { c.field = as_string(j, name); }, \
        [](const RunConfig& c) { return json(c.field); }                               \
  }
#define PARAVI_VEC(name, field, text)                                                  \
  Binding {                                                                            \
    name, text, false, [](RunConfig& c, const json& j) { c.field = as_vector(j, name); }, \
        [](const RunConfig& c) { return json(c.field); }                               \
  }
#define PARAVI_FLAG(name, field, text)                                                 \
  Binding {                                                                            \
    name, text, true, [](RunConfig& c, const json& j) { c.field = as_bool(j, name); },    \
        [](const RunConfig& c) { return json(c.field); }                               \
  }

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> table = {
      PARAVI_STR("problem", problem, "built-in id (paper-sec5, remark-counterexample, identity-ball) or JSON file"),
      PARAVI_STR("mode", mode,
                 "continuous-second-order | continuous-coupled | continuous-first-order | discrete-inertial | "
                 "discrete-direct | compare | validate"),
      PARAVI_STR("family", family, "powerlawA | powerlawB | powerlawD | custom"),
      PARAVI_STR("schedule-file", schedule_file, "CSV table for --family custom"),
      PARAVI_NUM("h", h, "family parameter h"),
      PARAVI_NUM("s", s, "family parameter s"),
      PARAVI_NUM("p", p, "family parameter p"),
      PARAVI_OPTNUM("q", q, "family parameter q"),
      PARAVI_NUM("u", u, "family parameter u"),
      PARAVI_NUM("deltaP", deltaP, "powerlawD parameter delta"),
      PARAVI_NUM("thetaP", thetaP, "powerlawD parameter theta"),
      PARAVI_NUM("lambdaP", lambdaP, "powerlawD parameter lambda"),
      PARAVI_OPTNUM("omega", omega, "powerlawD offset (default: admissible bound + 1)"),
      PARAVI_NUM("tau", tau, "direct method exponent"),
      PARAVI_NUM("step", step, "integrator step"),
      PARAVI_NUM("t-end", t_end, "integration horizon"),
      PARAVI_STR("method", method, "rk4 | euler"),
      PARAVI_COUNT("record-every", record_every, "keep every k-th integrator step"),
      PARAVI_VEC("x0", x0, "start point, comma separated"),
      PARAVI_VEC("x1", x1, "second point (quarter-convention velocity / z(1))"),
      PARAVI_VEC("v0", v0, "explicit initial velocity"),
      PARAVI_STR("velocity-mode", velocity_mode, "auto | quarter_convention | explicit"),
      PARAVI_NUM("tol", tol, "residual tolerance (0 disables)"),
      PARAVI_COUNT("max-iters", max_iters, "iteration cap"),
      PARAVI_NUM("stagnation-tol", stagnation_tol, "stop when the step norm stays below this (0 disables)"),
      PARAVI_COUNT("stagnation-window", stagnation_window, "consecutive stagnant steps required"),
      PARAVI_COUNT("dense-until", dense_until, "log every iterate up to this index"),
      PARAVI_COUNT("log-every", log_every, "log cadence after dense-until"),
      PARAVI_OPTNUM("c1", c1, "constant C1 for custom continuous schedules"),
      PARAVI_OPTNUM("c2", c2, "constant C2 for custom continuous schedules"),
      PARAVI_OPTNUM("q1", q1, "constant Q1 for custom discrete schedules"),
      PARAVI_OPTNUM("q2", q2, "constant Q2 for custom discrete schedules"),
      PARAVI_OPTNUM("horizon", horizon, "validation horizon (time or index)"),
      PARAVI_FLAG("allow-inadmissible", allow_inadmissible, "run despite coefficient violations (warns)"),
      PARAVI_FLAG("no-validate", no_validate, "skip schedule validation"),
      PARAVI_FLAG("energy", energy, "also write energy.csv"),
      PARAVI_COUNT("seed", seed, "seed for sampled start points"),
      PARAVI_STR("out", out, "output directory"),
  };
  return table;
}

#undef PARAVI_NUM
#undef PARAVI_OPTNUM
#undef PARAVI_COUNT
#undef PARAVI_STR
#undef PARAVI_VEC
#undef PARAVI_FLAG

std::string canonical_key(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  if (key == "z0") return "x0";
  if (key == "z1") return "x1";
  if (key == "dt") return "step";
  return key;
}

void apply_key(RunConfig& cfg, const std::string& raw_key, const json& value) {
  const std::string key = canonical_key(raw_key);
  if (key == "algorithm") {
    const auto a = as_string(value, raw_key);
    if (a == "inertial") {
      cfg.mode = "discrete-inertial";
    } else if (a == "direct") {
      cfg.mode = "discrete-direct";
    } else {
      bad_key(raw_key, "expected inertial or direct");
    }
    return;
  }
  for (const auto& b : bindings()) {
    if (b.key == key) {
      b.set(cfg, value);
      return;
    }
  }
  bad_key(raw_key, "unknown key");
}

// ---- resolution ----------------------------------------------------------

bool is_continuous(const std::string& mode) { return mode.rfind("continuous-", 0) == 0; }

ProblemInstance resolve_problem(const std::string& id) {
  if (auto b = builtin_problem(id)) return *b;
  if (!fs::exists(id)) bad_key("problem", "'" + id + "' is neither a built-in id nor an existing file");
  return load_problem(id);
}

Point to_point(const std::vector<double>& v) {
  Point p(static_cast<Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) p[static_cast<Index>(i)] = v[i];
  return p;
}

struct Starts {
  Point a;
  Point b;
};

Starts resolve_starts(const RunConfig& cfg, const ProblemInstance& prob) {
  Starts s;
  const Index d = prob.dimension();
  if (cfg.problem == kBuiltinRemark) {
    s.a = Point::Constant(1, kRemarkStart);
    s.b = s.a;
  } else if (builtin_problem(cfg.problem) && d >= 2) {
    s.a = Point::Zero(d);
    s.b = Point::Zero(d);
    s.a[0] = 1.0;
    s.b[1] = 1.0;
  } else {
    std::mt19937_64 rng(cfg.seed);
    s.a = prob.set().sample(rng);
    s.b = prob.set().sample(rng);
  }
  if (!cfg.x0.empty()) s.a = to_point(cfg.x0);
  if (!cfg.x1.empty()) s.b = to_point(cfg.x1);
  if (s.a.size() != d) bad_key("x0", "dimension " + std::to_string(s.a.size()) + ", problem has " + std::to_string(d));
  if (s.b.size() != d) bad_key("x1", "dimension " + std::to_string(s.b.size()) + ", problem has " + std::to_string(d));
  return s;
}

bool remark_defaults(const RunConfig& cfg) { return cfg.problem == kBuiltinRemark && cfg.family.empty(); }

std::string family_of(const RunConfig& cfg) {
  if (!cfg.family.empty()) return cfg.family;
  return is_continuous(cfg.mode) ? "powerlawB" : "powerlawD";
}

std::vector<ScheduleRow> table_rows(const RunConfig& cfg) {
  if (cfg.schedule_file.empty()) bad_key("schedule-file", "required for family custom");
  return read_schedule_csv(cfg.schedule_file);
}

ContinuousSchedule continuous_schedule(const RunConfig& cfg) {
  if (remark_defaults(cfg)) return remark_schedule();
  const auto f = family_of(cfg);
  if (f == "powerlawA") return build_continuous_powerlawA(cfg.h, cfg.s, cfg.p, cfg.q.value_or(0.4));
  if (f == "powerlawB") return build_continuous_powerlawB(cfg.h, cfg.s, cfg.q.value_or(0.71), cfg.u);
  if (f == "custom") return continuous_from_table(table_rows(cfg));
  bad_key("family", "'" + f + "' is not a continuous family");
}

DiscreteSchedule discrete_schedule(const RunConfig& cfg) {
  const auto f = family_of(cfg);
  if (f == "powerlawD")
    return build_discrete_powerlawD(cfg.p, cfg.q.value_or(0.5), cfg.deltaP, cfg.thetaP, cfg.lambdaP, cfg.omega);
  if (f == "custom") return discrete_from_table(table_rows(cfg));
  bad_key("family", "'" + f + "' is not a discrete family");
}

void print_report(const ValidationReport& r, std::ostream& os) {
  for (const auto& c : r.checks) {
    os << to_string(c.status) << "  " << c.id;
    if (c.status == ConditionStatus::Fail) os << "  at " << format_real(c.location);
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << (r.satisfied ? "satisfied" : "NOT satisfied") << '\n';
}

/// Result of one run before anything touches the disk.
struct Outcome {
  std::string mode;
  std::string csv;
  std::string energy_csv;
  std::string comparison_csv;
  std::vector<std::pair<std::string, std::string>> extra_csv;
  RunSummary summary;
  std::string report;
  bool validation_failed = false;
  std::vector<std::string> notes;
  std::int64_t horizon = 0;
};

std::optional<ValidationReport> validate_continuous_for(const RunConfig& cfg, const ContinuousSchedule& sched,
                                                        Outcome& o) {
  if (cfg.no_validate) return std::nullopt;
  if (remark_defaults(cfg)) {
    o.notes.push_back("remark instance: validation skipped, the schedule is inadmissible on purpose");
    return std::nullopt;
  }
  ContinuousConstants k{};
  if (sched.is_family()) {
    k = continuous_family_constants(sched);
  } else if (cfg.c1 && cfg.c2) {
    k = {*cfg.c1, *cfg.c2};
  } else {
    o.notes.push_back("custom schedule without --c1/--c2: validation skipped");
    return std::nullopt;
  }
  const double horizon = cfg.horizon.value_or(std::max(cfg.t_end, kDefaultContinuousSpan));
  return validate_continuous(sched, k.c1, k.c2, horizon);
}

std::optional<ValidationReport> validate_discrete_for(const RunConfig& cfg, const DiscreteSchedule& sched,
                                                      Outcome& o) {
  if (cfg.no_validate) return std::nullopt;
  DiscreteConstants k{};
  if (sched.is_family()) {
    k = discrete_family_constants(sched);
  } else if (cfg.q1 && cfg.q2) {
    k = {*cfg.q1, *cfg.q2};
  } else {
    o.notes.push_back("custom schedule without --q1/--q2: validation skipped");
    return std::nullopt;
  }
  const auto horizon = static_cast<std::int64_t>(cfg.horizon.value_or(static_cast<double>(kDefaultDiscreteHorizon)));
  return validate_discrete(sched, k.q1, k.q2, horizon);
}

bool record_validation(const std::optional<ValidationReport>& r, Outcome& o) {
  if (!r) return true;
  std::ostringstream os;
  print_report(*r, os);
  o.report = os.str();
  o.validation_failed = !r->satisfied;
  return r->satisfied;
}

IntegratorConfig integrator_config(const RunConfig& cfg) {
  IntegratorConfig ic;
  ic.step = cfg.step;
  ic.t_end = cfg.t_end;
  if (cfg.method == "rk4") {
    ic.method = StepMethod::Rk4;
  } else if (cfg.method == "euler") {
    ic.method = StepMethod::Euler;
  } else {
    bad_key("method", "expected rk4 or euler");
  }
  if (cfg.record_every < 1) bad_key("record-every", "must be >= 1");
  ic.record_every = static_cast<std::size_t>(cfg.record_every);
  return ic;
}

RunOptions run_options(const RunConfig& cfg) {
  RunOptions o;
  o.stop.residual_tol = cfg.tol;
  o.stop.max_iters = cfg.max_iters;
  o.stop.stagnation_tol = cfg.stagnation_tol;
  o.stop.stagnation_window = cfg.stagnation_window;
  o.record.dense_until = cfg.dense_until;
  o.record.every = cfg.log_every;
  o.allow_inadmissible = cfg.allow_inadmissible;
  return o;
}

bool explicit_velocity(const RunConfig& cfg) {
  if (cfg.velocity_mode == "explicit") {
    if (cfg.v0.empty()) bad_key("v0", "required with velocity-mode explicit");
    return true;
  }
  if (cfg.velocity_mode == "quarter_convention") {
    if (!cfg.v0.empty()) bad_key("v0", "conflicts with velocity-mode quarter_convention");
    return false;
  }
  if (cfg.velocity_mode != "auto") bad_key("velocity-mode", "expected auto, quarter_convention or explicit");
  return !cfg.v0.empty();
}

std::string continuous_energy_csv(const ContinuousTrajectory& traj, const std::optional<Point>& ref) {
  const auto e = compute_energy(traj, ref);
  std::string s = ref ? "t,v_ref,b\n" : "t,b\n";
  for (std::size_t k = 0; k < e.t.size(); ++k) {
    s += format_real(e.t[k]);
    if (ref) s += "," + format_real(e.v_ref[k]);
    s += "," + format_real(e.b[k]) + "\n";
  }
  return s;
}

std::string discrete_energy_csv(const RunResult& run, const std::optional<Point>& ref) {
  const auto e = compute_energy(run, ref);
  std::string s = ref ? "n,v_ref,a,c\n" : "n,a,c\n";
  for (std::size_t k = 0; k < e.n.size(); ++k) {
    s += std::to_string(e.n[k]);
    if (ref) s += "," + format_real(e.v_ref[k]);
    s += "," + format_real(e.a[k]) + "," + format_real(e.c[k]) + "\n";
  }
  return s;
}

void finish_continuous(const RunConfig& cfg, const ProblemInstance& prob, const ContinuousTrajectory& traj,
                       Outcome& o) {
  o.csv = trajectory_csv(traj);
  if (cfg.energy) o.energy_csv = continuous_energy_csv(traj, prob.reference_solution());
  o.summary = summarize(traj, config_to_json(cfg));
}

void finish_discrete(const RunConfig& cfg, const ProblemInstance& prob, const RunResult& run, Outcome& o) {
  o.csv = run_csv(run);
  if (cfg.energy) o.energy_csv = discrete_energy_csv(run, prob.reference_solution());
  o.summary = summarize(run, config_to_json(cfg));
  o.horizon = run.final_index;
}

/// Runs one configuration in memory. Thread-safe; never writes files.
Outcome execute(const RunConfig& cfg) {
  Outcome o;
  o.mode = cfg.mode;
  const ProblemInstance prob = resolve_problem(cfg.problem);
  const Starts st = resolve_starts(cfg, prob);

  if (is_continuous(cfg.mode)) {
    const auto sched = continuous_schedule(cfg);
    if (!record_validation(validate_continuous_for(cfg, sched, o), o)) return o;
    IntegratorConfig ic = integrator_config(cfg);
    if (remark_defaults(cfg)) ic.fixed_target = Point::Constant(1, kRemarkTarget);
    ContinuousTrajectory traj;
    if (cfg.mode == "continuous-second-order") {
      traj = explicit_velocity(cfg) ? integrate_second_order_velocity(prob, sched, st.a, to_point(cfg.v0), ic)
                                    : integrate_second_order(prob, sched, st.a, st.b, ic);
    } else if (cfg.mode == "continuous-coupled") {
      if (explicit_velocity(cfg)) bad_key("v0", "the coupled scheme needs the quarter-convention start");
      traj = integrate_coupled_feasible(prob, sched, st.a, st.b, ic);
    } else if (cfg.mode == "continuous-first-order") {
      FirstOrderSchedule fo{sched.delta, sched.alpha0, sched.t0};
      traj = integrate_first_order_baseline(prob, fo, st.a, ic);
    } else {
      bad_key("mode", "unknown mode '" + cfg.mode + "'");
    }
    finish_continuous(cfg, prob, traj, o);
    return o;
  }

  if (cfg.mode == "discrete-inertial") {
    const auto sched = discrete_schedule(cfg);
    if (!record_validation(validate_discrete_for(cfg, sched, o), o)) return o;
    finish_discrete(cfg, prob, run_inertial(prob, sched, st.a, st.b, run_options(cfg)), o);
    return o;
  }
  if (cfg.mode == "discrete-direct") {
    finish_discrete(cfg, prob, run_direct_method(prob, cfg.tau, st.a, run_options(cfg)), o);
    return o;
  }
  if (cfg.mode == "compare") {
    const auto sched = discrete_schedule(cfg);
    if (!record_validation(validate_discrete_for(cfg, sched, o), o)) return o;
    const RunOptions ro = run_options(cfg);
    MethodConfig inertial;
    inertial.method_id = "inertial";
    inertial.schedule_id = sched.label;
    inertial.schedule = sched;
    inertial.z0 = st.a;
    inertial.z1 = st.b;
    inertial.record = ro.record;
    inertial.allow_inadmissible = cfg.allow_inadmissible;
    MethodConfig direct;
    direct.method_id = "direct";
    direct.schedule_id = "tau=" + format_real(cfg.tau);
    direct.kind = MethodKind::Direct;
    direct.tau = cfg.tau;
    direct.z0 = st.a;
    direct.record = ro.record;
    const auto table = compare_methods(prob, {inertial, direct}, ro.stop);
    o.comparison_csv = comparison_csv(table);
    for (const auto& row : table.rows) {
      if (row.error) o.notes.push_back(row.method + " failed: " + *row.error);
      if (row.run) o.extra_csv.emplace_back(row.method + ".csv", run_csv(*row.run));
    }
    const auto& first = table.rows.front();
    if (first.run) o.summary = summarize(*first.run, config_to_json(cfg));
    o.summary.algorithm = "compare";
    return o;
  }
  bad_key("mode", "unknown mode '" + cfg.mode + "'");
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const ScheduleRejected& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConditionFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

void emit_notes(const Outcome& o, std::ostream& err) {
  for (const auto& n : o.notes) err << "note: " << n << '\n';
  for (const auto& w : o.summary.warnings) err << "warning: " << w << '\n';
}

std::string compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// ---- reproduce -----------------------------------------------------------

struct Curve {
  std::string label;
  std::string kind;
  RunConfig cfg;
};

RunConfig benchmark_continuous(double h) {
  RunConfig c;
  c.mode = "continuous-second-order";
  c.family = "powerlawB";
  c.h = h;
  c.s = 0.35;
  c.q = 0.71;
  c.u = 1.0;
  c.x0 = {1, 0, 0};
  c.v0 = {-0.75, 0.75, 0};
  c.step = 1e-3;
  c.t_end = 50.0;
  c.record_every = 10;
  return c;
}

RunConfig benchmark_discrete(const std::string& mode, std::int64_t horizon) {
  RunConfig c;
  c.mode = mode;
  c.x0 = {1, 0, 0};
  c.x1 = {0, 1, 0};
  c.tol = 0.0;
  c.max_iters = horizon;
  c.dense_until = 1000;
  c.log_every = 10;
  return c;
}

RunConfig powerlawD_curve(double p, double q, double d, double th, double l, std::int64_t horizon) {
  RunConfig c = benchmark_discrete("discrete-inertial", horizon);
  c.family = "powerlawD";
  c.p = p;
  c.q = q;
  c.deltaP = d;
  c.thetaP = th;
  c.lambdaP = l;
  return c;
}

constexpr std::int64_t kFigureHorizon = 10000;

std::vector<Curve> figure_curves(const std::string& figure) {
  std::vector<Curve> curves;
  if (figure == "fig1") {
    for (double h : {2.5, 3.0, 4.0}) curves.push_back({"h=" + compact(h), "second-order", benchmark_continuous(h)});
  } else if (figure == "fig2") {
    const double grid[][5] = {{.5, .5, 1, 1, .5}, {.4, .5, 1, 1, .5}, {.6, .3, 1, 1, .5}, {.5, .4, .5, .5, 1},
                              {.3, .6, 2, 1, 1}};
    for (const auto& g : grid) {
      curves.push_back({"p=" + compact(g[0]) + "_q=" + compact(g[1]) + "_delta=" + compact(g[2]) +
                            "_theta=" + compact(g[3]) + "_lambda=" + compact(g[4]),
                        "inertial", powerlawD_curve(g[0], g[1], g[2], g[3], g[4], kFigureHorizon)});
    }
  } else if (figure == "fig3") {
    for (const auto& g : fig3_grid()) {
      curves.push_back({"delta=" + compact(g[0]) + "_theta=" + compact(g[1]) + "_lambda=" + compact(g[2]),
                        "inertial", powerlawD_curve(0.5, 0.5, g[0], g[1], g[2], kFigureHorizon)});
    }
    RunConfig direct = benchmark_discrete("discrete-direct", kFigureHorizon);
    direct.tau = 0.75;
    curves.push_back({"direct_tau=0.75", "direct", direct});
  } else {
    throw ConfigurationError("unknown figure '" + figure + "' (expected fig1, fig2 or fig3)");
  }
  return curves;
}

}  // namespace

const std::vector<std::array<double, 3>>& fig3_grid() {
  static const std::vector<std::array<double, 3>> grid = {{1, 1, .5}, {.5, .5, 1}, {.1, 1, 1}, {2, 1, 2}};
  return grid;
}

void apply_config_json(RunConfig& cfg, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigurationError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigurationError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) apply_key(cfg, key, value);
}

std::string config_to_json(const RunConfig& cfg) {
  json j = json::object();
  for (const auto& b : bindings()) {
    if (b.key == "out") continue;
    j[b.key] = b.get(cfg);
  }
  return j.dump();
}

fs::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PARAVI_OUTPUT_DIR"); env && *env) return env;
  return "paravi_out";
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.mode == "validate") return cmd_validate(cfg, out, err);
  return guarded(
      [&] {
        const Outcome o = execute(cfg);
        emit_notes(o, err);
        if (o.validation_failed) {
          err << o.report;
          return static_cast<int>(kExitValidation);
        }
        const fs::path dir = output_dir(cfg.out);
        std::vector<fs::path> written;
        auto put = [&](const std::string& name, const std::string& text) {
          write_text(dir / name, text);
          written.push_back(dir / name);
        };
        if (!o.csv.empty()) put(o.mode + ".csv", o.csv);
        if (!o.comparison_csv.empty()) put("comparison.csv", o.comparison_csv);
        for (const auto& [name, text] : o.extra_csv) put(name, text);
        if (!o.energy_csv.empty()) put("energy.csv", o.energy_csv);
        write_summary_json(o.summary, dir / "summary.json");
        written.push_back(dir / "summary.json");
        for (const auto& p : written) out << "wrote " << p.string() << '\n';
        out << "stop=" << o.summary.stop_reason << " iterations=" << o.summary.iterations
            << " residual=" << format_real(o.summary.final_residual) << '\n';
        return static_cast<int>(kExitOk);
      },
      err);
}

int cmd_validate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        if (cfg.family.empty()) bad_key("family", "required for validate");
        Outcome o;
        std::optional<ValidationReport> r;
        const bool discrete = cfg.family == "powerlawD" || (cfg.family == "custom" && cfg.q1 && cfg.q2);
        RunConfig c = cfg;
        c.mode = discrete ? "discrete-inertial" : "continuous-second-order";
        c.no_validate = false;
        if (discrete) {
          r = validate_discrete_for(c, discrete_schedule(c), o);
        } else {
          if (cfg.family == "custom" && !(cfg.c1 && cfg.c2)) bad_key("c1", "custom validation needs c1,c2 or q1,q2");
          r = validate_continuous_for(c, continuous_schedule(c), o);
        }
        print_report(*r, out);
        return static_cast<int>(r->satisfied ? kExitOk : kExitValidation);
      },
      err);
}

int cmd_reproduce(const std::string& figure, const fs::path& outdir, std::uint64_t seed, std::ostream& out,
                  std::ostream& err) {
  return guarded(
      [&] {
        auto curves = figure_curves(figure);
        std::vector<std::future<Outcome>> jobs;
        for (auto& c : curves) {
          c.cfg.seed = seed;
          jobs.push_back(std::async(std::launch::async, [cfg = c.cfg] { return execute(cfg); }));
        }
        std::optional<std::future<ComparisonTable>> table;
        if (figure == "fig3") {
          table = std::async(std::launch::async, [&curves] {
            const auto prob = unit_ball_linear();
            std::vector<MethodConfig> configs;
            for (const auto& c : curves) {
              MethodConfig m;
              m.method_id = c.kind;
              m.schedule_id = c.label;
              m.z0 = to_point(c.cfg.x0);
              if (c.kind == "direct") {
                m.kind = MethodKind::Direct;
                m.tau = c.cfg.tau;
              } else {
                m.z1 = to_point(c.cfg.x1);
                m.schedule = discrete_schedule(c.cfg);
              }
              configs.push_back(std::move(m));
            }
            StopRule stop;
            stop.residual_tol = 1e-3;
            return compare_methods(prob, configs, stop);
          });
        }

        const fs::path dir = outdir / figure;
        json manifest;
        manifest["figure"] = figure;
        manifest["seed"] = seed;
        manifest["grid"] = "documented default grid; the source does not print the exact curve parameters";
        manifest["curves"] = json::array();
        for (std::size_t k = 0; k < curves.size(); ++k) {
          const Outcome o = jobs[k].get();
          if (o.validation_failed) throw ConditionFailure("schedule validation", 0.0, curves[k].label);
          const std::string file = curves[k].label + ".csv";
          write_text(dir / file, o.csv);
          json entry;
          entry["file"] = file;
          entry["label"] = curves[k].label;
          entry["kind"] = curves[k].kind;
          if (is_continuous(curves[k].cfg.mode)) {
            entry["t_end"] = curves[k].cfg.t_end;
            entry["step"] = curves[k].cfg.step;
          } else {
            entry["horizon"] = o.horizon;
          }
          entry["config"] = json::parse(config_to_json(curves[k].cfg));
          entry["warnings"] = o.summary.warnings;
          manifest["curves"].push_back(entry);
          out << "wrote " << (dir / file).string() << '\n';
        }
        if (table) {
          const auto t = table->get();
          write_csv(t, dir / "comparison.csv");
          manifest["comparison"] = {{"file", "comparison.csv"}, {"residual_tol", t.stop.residual_tol},
                                    {"max_iters", t.stop.max_iters}};
          out << "wrote " << (dir / "comparison.csv").string() << '\n';
        }
        write_text(dir / "manifest.json", manifest.dump(2) + "\n");
        out << "wrote " << (dir / "manifest.json").string() << '\n';
        return static_cast<int>(kExitOk);
      },
      err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"paravi: projection-type dynamics and inertial iterations for monotone variational inequalities"};
  app.set_help_flag("--help", "show help");
  app.require_subcommand(1);

  struct Bound {
    const Binding* binding;
    CLI::Option* option;
  };
  std::map<std::string, std::string> values_run, values_validate;
  std::map<std::string, bool> flags_run, flags_validate;
  std::string config_run, config_validate;

  auto attach = [](CLI::App* sub, std::map<std::string, std::string>& values, std::map<std::string, bool>& flags,
                   std::string& config) {
    sub->set_help_flag("--help", "show help");
    sub->add_option("--config", config, "JSON file with the same keys as the flags");
    std::vector<Bound> bound;
    for (const auto& b : bindings()) {
      CLI::Option* o = b.is_flag ? sub->add_flag("--" + b.key, flags[b.key], b.help)
                                 : sub->add_option("--" + b.key, values[b.key], b.help);
      bound.push_back({&b, o});
    }
    return bound;
  };

  auto* run = app.add_subcommand("run", "run one pipeline and write CSV/JSON artifacts");
  auto* validate = app.add_subcommand("validate", "check a schedule against its admissibility conditions");
  auto* reproduce = app.add_subcommand("reproduce", "regenerate the data behind fig1, fig2 or fig3");
  const auto bound_run = attach(run, values_run, flags_run, config_run);
  const auto bound_validate = attach(validate, values_validate, flags_validate, config_validate);

  std::string figure, rep_out;
  std::uint64_t rep_seed = 0;
  reproduce->set_help_flag("--help", "show help");
  reproduce->add_option("figure", figure, "fig1 | fig2 | fig3")->required();
  reproduce->add_option("--out", rep_out, "output directory");
  reproduce->add_option("--seed", rep_seed, "seed echoed into the manifest");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  if (reproduce->parsed()) return cmd_reproduce(figure, output_dir(rep_out), rep_seed, out, err);

  const bool is_validate = validate->parsed();
  const auto& bound = is_validate ? bound_validate : bound_run;
  const auto& values = is_validate ? values_validate : values_run;
  const auto& flags = is_validate ? flags_validate : flags_run;
  const auto& config_path = is_validate ? config_validate : config_run;

  RunConfig cfg;
  const int status = guarded(
      [&] {
        if (!config_path.empty()) {
          std::ifstream in(config_path);
          if (!in) throw IoError("cannot read config " + config_path);
          std::stringstream ss;
          ss << in.rdbuf();
          apply_config_json(cfg, ss.str());
        }
        for (const auto& [b, o] : bound) {
          if (o->count() == 0) continue;
          b->set(cfg, b->is_flag ? json(flags.at(b->key)) : json(values.at(b->key)));
        }
        return static_cast<int>(kExitOk);
      },
      err);
  if (status != kExitOk) return status;
  return is_validate ? cmd_validate(cfg, out, err) : cmd_run(cfg, out, err);
}

}  // namespace paravi::app
