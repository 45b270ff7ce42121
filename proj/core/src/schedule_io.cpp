#include "paravi/schedule_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "paravi/error.hpp"

namespace paravi {

namespace {

bool parse_double(std::string field, double& out) {
  field.erase(0, field.find_first_not_of(" \t\r"));
  field.erase(field.find_last_not_of(" \t\r") + 1);
  if (field.empty()) return false;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

struct Table {
  std::vector<double> t;
  std::array<std::vector<double>, 4> cols;

  double interpolate(std::size_t col, double x) const {
    const auto& v = cols[col];
    if (x <= t.front()) return v.front();
    if (x >= t.back()) return v.back();
    const auto it = std::upper_bound(t.begin(), t.end(), x);
    const auto hi = static_cast<std::size_t>(it - t.begin());
    const std::size_t lo = hi - 1;
    const double w = (x - t[lo]) / (t[hi] - t[lo]);
    return (1.0 - w) * v[lo] + w * v[hi];
  }

  double lookup(std::size_t col, std::int64_t n) const {
    const auto& v = cols[col];
    if (n < 0) return v.front();
    return v[std::min(static_cast<std::size_t>(n), v.size() - 1)];
  }
};

std::shared_ptr<const Table> make_table(std::vector<ScheduleRow> rows) {
  if (rows.empty()) throw DefinitionError("schedule table is empty");
  auto table = std::make_shared<Table>();
  for (const auto& r : rows) {
    for (double v : r)
      if (!std::isfinite(v)) throw DefinitionError("schedule table contains non-finite values");
    table->t.push_back(r[0]);
    for (std::size_t c = 0; c < 4; ++c) table->cols[c].push_back(r[c + 1]);
  }
  return table;
}

}  // namespace

ContinuousSchedule continuous_from_table(std::vector<ScheduleRow> rows) {
  auto table = make_table(std::move(rows));
  for (std::size_t i = 1; i < table->t.size(); ++i) {
    if (!(table->t[i] > table->t[i - 1])) throw DefinitionError("schedule table times must increase strictly");
  }
  ContinuousSchedule s;
  s.alpha0 = [table](double t) { return table->interpolate(0, t); };
  s.alpha1 = [table](double t) { return table->interpolate(1, t); };
  s.delta = [table](double t) { return table->interpolate(2, t); };
  s.lambda = [table](double t) { return table->interpolate(3, t); };
  s.t0 = table->t.front();
  s.label = "custom";
  return s;
}

DiscreteSchedule discrete_from_table(std::vector<ScheduleRow> rows) {
  auto table = make_table(std::move(rows));
  for (std::size_t i = 0; i < table->t.size(); ++i) {
    if (table->t[i] != static_cast<double>(i)) {
      throw DefinitionError("discrete schedule rows must be indexed 0, 1, 2, ...");
    }
  }
  DiscreteSchedule s;
  s.beta0 = [table](std::int64_t n) { return table->lookup(0, n); };
  s.beta1 = [table](std::int64_t n) { return table->lookup(1, n); };
  s.xi = [table](std::int64_t n) { return table->lookup(2, n); };
  s.eta = [table](std::int64_t n) { return table->lookup(3, n); };
  s.label = "custom";
  return s;
}

std::vector<ScheduleRow> read_schedule_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open schedule table " + path.string());
  std::vector<ScheduleRow> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string field;
    ScheduleRow row{};
    std::size_t col = 0;
    bool numeric = true;
    while (std::getline(ss, field, ',')) {
      if (col >= row.size() || !parse_double(field, row[col])) {
        numeric = false;
        break;
      }
      ++col;
    }
    if (!numeric || col != row.size()) {
      if (lineno == 1 && !numeric) continue;
      throw IoError(path.string() + ":" + std::to_string(lineno) + ": expected 5 numeric columns");
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace paravi
