#include "paravi/problem_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "paravi/error.hpp"

namespace paravi {

namespace {

using nlohmann::json;

Point to_point(const json& j, const char* what) {
  if (!j.is_array()) throw DefinitionError(std::string(what) + " must be an array of numbers");
  Point p(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw DefinitionError(std::string(what) + " must contain numbers only");
    p[static_cast<Index>(i)] = j[i].get<double>();
  }
  return p;
}

json from_point(const Point& p) {
  json out = json::array();
  for (Index i = 0; i < p.size(); ++i) out.push_back(p[i]);
  return out;
}

Matrix to_matrix(const json& j, Index d) {
  Matrix a(d, d);
  if (j.is_array() && !j.empty() && j[0].is_array()) {
    if (static_cast<Index>(j.size()) != d) throw DefinitionError("matrix must have 'dimension' rows");
    for (Index r = 0; r < d; ++r) {
      const Point row = to_point(j[static_cast<std::size_t>(r)], "matrix row");
      if (row.size() != d) throw DefinitionError("matrix rows must have 'dimension' entries");
      a.row(r) = row.transpose();
    }
    return a;
  }
  const Point flat = to_point(j, "matrix");
  if (flat.size() != d * d) throw DefinitionError("flat matrix must have dimension^2 entries");
  for (Index r = 0; r < d; ++r)
    for (Index c = 0; c < d; ++c) a(r, c) = flat[r * d + c];
  return a;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DefinitionError(std::string("missing key '") + key + "'");
  return j.at(key);
}

FeasibleSet parse_set(const json& j, Index d) {
  const auto kind = require(j, "kind").get<std::string>();
  const json params = j.contains("params") ? j.at("params") : json::object();
  if (kind == "ball") {
    Point center = params.contains("center") ? to_point(params.at("center"), "center") : Point(Point::Zero(d));
    return FeasibleSet::ball(std::move(center), require(params, "radius").get<double>());
  }
  if (kind == "box") {
    return FeasibleSet::box(to_point(require(params, "lower"), "lower"), to_point(require(params, "upper"), "upper"));
  }
  if (kind == "simplex") {
    const double scale = params.contains("scale") ? params.at("scale").get<double>() : 1.0;
    return FeasibleSet::simplex(d, scale);
  }
  if (kind == "interval") {
    return FeasibleSet::interval(require(params, "lo").get<double>(), require(params, "hi").get<double>());
  }
  throw DefinitionError("unknown set kind '" + kind + "'");
}

}  // namespace

ProblemInstance parse_problem(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DefinitionError(std::string("problem document is not valid JSON: ") + e.what());
  }
  try {
    const auto d = static_cast<Index>(require(doc, "dimension").get<long long>());
    if (d < 1) throw DefinitionError("dimension must be >= 1");

    const json& op_doc = require(doc, "operator");
    const auto kind = require(op_doc, "kind").get<std::string>();
    std::optional<Operator> op;
    if (kind == "linear") {
      op = Operator::linear(to_matrix(require(op_doc, "matrix"), d));
    } else if (kind == "identity") {
      op = Operator::identity(d);
    } else {
      throw DefinitionError("operator kind '" + kind + "' cannot be loaded from a file");
    }

    FeasibleSet set = parse_set(require(doc, "set"), d);
    std::optional<Point> ref;
    if (doc.contains("reference_solution") && !doc.at("reference_solution").is_null()) {
      ref = to_point(doc.at("reference_solution"), "reference_solution");
    }
    std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : std::string("file");
    return ProblemInstance(std::move(*op), std::move(set), std::move(ref), std::move(name));
  } catch (const json::exception& e) {
    throw DefinitionError(std::string("malformed problem document: ") + e.what());
  }
}

ProblemInstance load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open problem file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

std::string problem_to_json(const ProblemInstance& prob) {
  const Index d = prob.dimension();
  json doc;
  doc["name"] = prob.name();
  doc["dimension"] = d;
  json rows = json::array();
  const Matrix& a = prob.op().matrix();
  for (Index r = 0; r < d; ++r) rows.push_back(from_point(a.row(r).transpose()));
  doc["operator"] = {{"kind", "linear"}, {"matrix", rows}};

  json set;
  set["kind"] = std::string(prob.set().kind());
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Ball>) {
          set["params"] = {{"center", from_point(s.center)}, {"radius", s.radius}};
        } else if constexpr (std::is_same_v<T, Box>) {
          set["params"] = {{"lower", from_point(s.lower)}, {"upper", from_point(s.upper)}};
        } else if constexpr (std::is_same_v<T, Simplex>) {
          set["params"] = {{"scale", s.scale}};
        } else {
          set["params"] = {{"lo", s.lo}, {"hi", s.hi}};
        }
      },
      prob.set().shape());
  doc["set"] = set;
  if (prob.reference_solution()) doc["reference_solution"] = from_point(*prob.reference_solution());
  return doc.dump(2);
}

}  // namespace paravi
