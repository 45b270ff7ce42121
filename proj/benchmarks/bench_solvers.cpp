#include <benchmark/benchmark.h>

#include "paravi/builtin.hpp"
#include "paravi/continuous.hpp"
#include "paravi/discrete.hpp"
#include "paravi/schedule.hpp"

namespace {

paravi::Point e(int i) {
  paravi::Point p = paravi::Point::Zero(3);
  p[i] = 1.0;
  return p;
}

void BM_InertialIterations(benchmark::State& state) {
  const auto prob = paravi::unit_ball_linear();
  const auto sched = paravi::build_discrete_powerlawD(0.5, 0.5, 1, 1, 0.5, 5.0);
  paravi::RunOptions opts;
  opts.stop.residual_tol = 0.0;
  opts.stop.max_iters = state.range(0);
  opts.record.dense_until = 0;
  opts.record.every = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(paravi::run_inertial(prob, sched, e(0), e(1), opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DirectIterations(benchmark::State& state) {
  const auto prob = paravi::unit_ball_linear();
  paravi::RunOptions opts;
  opts.stop.residual_tol = 0.0;
  opts.stop.max_iters = state.range(0);
  opts.record.dense_until = 0;
  opts.record.every = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(paravi::run_direct_method(prob, 0.75, e(0), opts));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SecondOrderRk4(benchmark::State& state) {
  const auto prob = paravi::unit_ball_linear();
  const auto sched = paravi::build_continuous_powerlawB(2.5, 0.35, 0.71, 1);
  paravi::IntegratorConfig cfg;
  cfg.step = 1e-3;
  cfg.t_end = 10.0;
  cfg.record_every = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(paravi::integrate_second_order(prob, sched, e(0), e(1), cfg));
}

void BM_CoupledScheme(benchmark::State& state) {
  const auto prob = paravi::unit_ball_linear();
  const auto sched = paravi::build_continuous_powerlawB(2.5, 0.35, 0.71, 1);
  paravi::IntegratorConfig cfg;
  cfg.step = 1e-3;
  cfg.t_end = 10.0;
  cfg.record_every = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(paravi::integrate_coupled_feasible(prob, sched, e(0), e(1), cfg));
}

void BM_Riccati(benchmark::State& state) {
  const auto sched = paravi::build_continuous_powerlawB(2.5, 0.35, 0.71, 1);
  for (auto _ : state) benchmark::DoNotOptimize(paravi::integrate_riccati(sched, 0.0, 100.0, 1e-3));
}

}  // namespace

BENCHMARK(BM_InertialIterations)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectIterations)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SecondOrderRk4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoupledScheme)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Riccati)->Unit(benchmark::kMillisecond);
