#include "paravi/sets.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "paravi/error.hpp"

namespace paravi {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void require_dim(const FeasibleSet& set, const Point& x) {
  if (x.size() != set.dimension()) {
    throw DefinitionError(std::string(set.kind()) + " of dimension " +
                          std::to_string(set.dimension()) + " given a point of dimension " +
                          std::to_string(x.size()));
  }
}

}  // namespace

FeasibleSet FeasibleSet::ball(Point center, double radius) {
  if (center.size() < 1 || !center.allFinite()) throw DefinitionError("ball center must be finite and non-empty");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw DefinitionError("ball radius must be positive");
  return FeasibleSet(Ball{std::move(center), radius});
}

FeasibleSet FeasibleSet::unit_ball(Index dim) { return ball(Point::Zero(dim), 1.0); }

FeasibleSet FeasibleSet::box(Point lower, Point upper) {
  if (lower.size() < 1 || lower.size() != upper.size()) {
    throw DefinitionError("box bounds must be non-empty and of equal dimension");
  }
  if (lower.hasNaN() || upper.hasNaN()) throw DefinitionError("box bounds contain NaN");
  if ((lower.array() > upper.array()).any()) throw DefinitionError("box needs lower <= upper componentwise");
  return FeasibleSet(Box{std::move(lower), std::move(upper)});
}

FeasibleSet FeasibleSet::simplex(Index dim, double scale) {
  if (dim < 1) throw DefinitionError("simplex needs dimension >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale)) throw DefinitionError("simplex scale must be positive");
  return FeasibleSet(Simplex{dim, scale});
}

FeasibleSet FeasibleSet::interval(double lo, double hi) {
  if (!(lo <= hi)) throw DefinitionError("interval needs lo <= hi");
  return FeasibleSet(Interval{lo, hi});
}

Index FeasibleSet::dimension() const noexcept {
  return std::visit(Overloaded{
                        [](const Ball& b) { return b.center.size(); },
                        [](const Box& b) { return b.lower.size(); },
                        [](const Simplex& s) { return s.dim; },
                        [](const Interval&) { return Index{1}; },
                    },
                    shape_);
}

std::string_view FeasibleSet::kind() const noexcept {
  return std::visit(Overloaded{
                        [](const Ball&) { return std::string_view("ball"); },
                        [](const Box&) { return std::string_view("box"); },
                        [](const Simplex&) { return std::string_view("simplex"); },
                        [](const Interval&) { return std::string_view("interval"); },
                    },
                    shape_);
}

Point project_simplex(const Point& v, double scale) {
  const Index d = v.size();
  std::vector<double> u(v.data(), v.data() + d);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0;
  double theta = 0.0;
  for (Index j = 0; j < d; ++j) {
    cumsum += u[j];
    const double t = (cumsum - scale) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  return (v.array() - theta).max(0.0).matrix();
}

Point FeasibleSet::project(const Point& x) const {
  require_dim(*this, x);
  return std::visit(Overloaded{
                        [&](const Ball& b) -> Point {
                          const Point r = x - b.center;
                          const double n = r.norm();
                          if (n <= b.radius) return x;
                          return b.center + (b.radius / n) * r;
                        },
                        [&](const Box& b) -> Point {
                          return x.cwiseMax(b.lower).cwiseMin(b.upper);
                        },
                        [&](const Simplex& s) -> Point { return project_simplex(x, s.scale); },
                        [&](const Interval& i) -> Point {
                          Point out(1);
                          out[0] = std::clamp(x[0], i.lo, i.hi);
                          return out;
                        },
                    },
                    shape_);
}

double FeasibleSet::violation(const Point& x) const {
  require_dim(*this, x);
  return std::visit(Overloaded{
                        [&](const Ball& b) { return std::max(0.0, (x - b.center).norm() - b.radius); },
                        [&](const Box& b) {
                          const double below = (b.lower - x).maxCoeff();
                          const double above = (x - b.upper).maxCoeff();
                          return std::max({0.0, below, above});
                        },
                        [&](const Simplex& s) {
                          return std::max({0.0, -x.minCoeff(), std::abs(x.sum() - s.scale)});
                        },
                        [&](const Interval& i) { return std::max({0.0, i.lo - x[0], x[0] - i.hi}); },
                    },
                    shape_);
}

Point FeasibleSet::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return std::visit(Overloaded{
                        [&](const Ball& b) -> Point {
                          const Index d = b.center.size();
                          std::normal_distribution<double> gauss(0.0, 1.0);
                          Point dir(d);
                          double n = 0.0;
                          do {
                            for (Index i = 0; i < d; ++i) dir[i] = gauss(rng);
                            n = dir.norm();
                          } while (n == 0.0);
                          const double r = b.radius * std::pow(unit(rng), 1.0 / static_cast<double>(d));
                          return b.center + (r / n) * dir;
                        },
                        [&](const Box& b) -> Point {
                          Point out(b.lower.size());
                          for (Index i = 0; i < out.size(); ++i) {
                            out[i] = b.lower[i] + unit(rng) * (b.upper[i] - b.lower[i]);
                          }
                          return out;
                        },
                        [&](const Simplex& s) -> Point {
                          std::exponential_distribution<double> expo(1.0);
                          Point out(s.dim);
                          for (Index i = 0; i < s.dim; ++i) out[i] = expo(rng);
                          return (s.scale / out.sum()) * out;
                        },
                        [&](const Interval& i) -> Point {
                          Point out(1);
                          out[0] = i.lo + unit(rng) * (i.hi - i.lo);
                          return out;
                        },
                    },
                    shape_);
}

}  // namespace paravi
