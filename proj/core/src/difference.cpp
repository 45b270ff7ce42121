#include "paravi/difference.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "paravi/error.hpp"

namespace paravi {

namespace {

void need(bool ok) {
  if (!ok) throw DefinitionError("difference index out of range");
}

bool close(double a, double b, double scale) { return std::abs(a - b) <= 1e-12 * std::max(1.0, scale); }

bool close(const Point& a, const Point& b, double scale) {
  return (a - b).lpNorm<Eigen::Infinity>() <= 1e-12 * std::max(1.0, scale);
}

}  // namespace

Point forward_difference(const Sequence& z, std::size_t n) {
  need(n + 1 < z.size());
  return z[n + 1] - z[n];
}

Point backward_difference(const Sequence& z, std::size_t n) {
  need(n >= 1 && n < z.size());
  return z[n] - z[n - 1];
}

Point second_difference(const Sequence& z, std::size_t n) {
  need(n >= 1 && n + 1 < z.size());
  return z[n + 1] - 2.0 * z[n] + z[n - 1];
}

double inner_forward_difference(const Sequence& h, const Sequence& g, std::size_t n) {
  need(n + 1 < h.size() && n + 1 < g.size());
  return h[n + 1].dot(g[n + 1]) - h[n].dot(g[n]);
}

double inner_backward_difference(const Sequence& h, const Sequence& g, std::size_t n) {
  need(n >= 1 && n < h.size() && n < g.size());
  return h[n].dot(g[n]) - h[n - 1].dot(g[n - 1]);
}

double forward_product_rule(const Sequence& h, const Sequence& g, std::size_t n) {
  const Point dh = forward_difference(h, n);
  const Point dg = forward_difference(g, n);
  return dh.dot(g[n]) + h[n].dot(dg) + dh.dot(dg);
}

double backward_product_rule(const Sequence& h, const Sequence& g, std::size_t n) {
  const Point dh = backward_difference(h, n);
  const Point dg = backward_difference(g, n);
  return dh.dot(g[n]) + h[n].dot(dg) - dh.dot(dg);
}

bool difference_identities_check(std::uint64_t seed, std::size_t trials) {
  if (trials == 0) throw ConfigurationError("trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim_dist(1, 6);
  std::uniform_int_distribution<int> len_dist(3, 12);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> log_scale(-3.0, 3.0);

  auto random_sequence = [&](Index d, std::size_t len) {
    Sequence s(len);
    const double scale = std::pow(10.0, log_scale(rng));
    for (auto& p : s) {
      p.resize(d);
      for (Index i = 0; i < d; ++i) p[i] = scale * normal(rng);
    }
    return s;
  };

  bool ok = true;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Index d = dim_dist(rng);
    const auto len = static_cast<std::size_t>(len_dist(rng));
    const Sequence h = random_sequence(d, len);
    const Sequence g = random_sequence(d, len);

    for (std::size_t n = 1; n + 1 < len; ++n) {
      const double mag = (h[n + 1].norm() + h[n].norm() + h[n - 1].norm()) *
                         (g[n + 1].norm() + g[n].norm() + g[n - 1].norm());
      ok = ok && close(inner_forward_difference(h, g, n), forward_product_rule(h, g, n), mag);
      ok = ok && close(inner_backward_difference(h, g, n), backward_product_rule(h, g, n), mag);

      // Delta of Nabla evaluated at n uses Nabla at n+1 and n, and the
      // other order uses Delta at n and n-1.
      const Point delta_nabla = backward_difference(h, n + 1) - backward_difference(h, n);
      const Point nabla_delta = forward_difference(h, n) - forward_difference(h, n - 1);
      const Point second = second_difference(h, n);
      const Point split = forward_difference(h, n) - backward_difference(h, n);
      const double hmag = h[n + 1].norm() + h[n].norm() + h[n - 1].norm();
      ok = ok && close(delta_nabla, second, hmag) && close(nabla_delta, second, hmag) && close(split, second, hmag);
    }
  }
  return ok;
}

}  // namespace paravi
