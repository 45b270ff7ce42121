#include <benchmark/benchmark.h>

#include <random>

#include "paravi/builtin.hpp"
#include "paravi/problem.hpp"
#include "paravi/sets.hpp"

namespace {

paravi::Point random_point(std::mt19937_64& rng, paravi::Index d) {
  std::normal_distribution<double> g(0.0, 2.0);
  paravi::Point p(d);
  for (paravi::Index i = 0; i < d; ++i) p[i] = g(rng);
  return p;
}

void project_set(benchmark::State& state, const paravi::FeasibleSet& set) {
  std::mt19937_64 rng(1);
  std::vector<paravi::Point> pts;
  for (int k = 0; k < 256; ++k) pts.push_back(random_point(rng, set.dimension()));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(paravi::project(set, pts[k++ & 255]));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_ProjectBall(benchmark::State& state) {
  project_set(state, paravi::FeasibleSet::unit_ball(state.range(0)));
}

void BM_ProjectBox(benchmark::State& state) {
  const auto d = state.range(0);
  project_set(state, paravi::FeasibleSet::box(paravi::Point::Constant(d, -1.0), paravi::Point::Constant(d, 1.0)));
}

void BM_ProjectSimplex(benchmark::State& state) {
  project_set(state, paravi::FeasibleSet::simplex(state.range(0), 1.0));
}

void BM_ForwardStepBenchmarkMatrix(benchmark::State& state) {
  const auto prob = paravi::unit_ball_linear();
  paravi::Point x(3);
  x << 0.3, -0.2, 0.5;
  for (auto _ : state) {
    x = paravi::normalized_forward_step(prob, x, 1e-3);
    benchmark::DoNotOptimize(x);
  }
}

}  // namespace

BENCHMARK(BM_ProjectBall)->RangeMultiplier(8)->Range(2, 1024);
BENCHMARK(BM_ProjectBox)->RangeMultiplier(8)->Range(2, 1024);
BENCHMARK(BM_ProjectSimplex)->RangeMultiplier(8)->Range(2, 1024);
BENCHMARK(BM_ForwardStepBenchmarkMatrix);
