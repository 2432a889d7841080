#include <benchmark/benchmark.h>

#include "mpendo/sweeps.hpp"

namespace {

mpendo::Exec exec_of(const benchmark::State& state)
{
  return state.range(0) == 0 ? mpendo::Exec::Serial : mpendo::Exec::Parallel;
}

void BM_LeviPreimages(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(mpendo::sweep_levi_preimages(7, exec_of(state)));
}

void BM_FiberBijection(benchmark::State& state)
{
  mpendo::FiberSweepOptions opt;
  opt.nmax = 4;
  opt.trials = 20;
  for (auto _ : state)
    benchmark::DoNotOptimize(mpendo::sweep_fiber_bijection(opt, exec_of(state)));
}

void BM_Commutation(benchmark::State& state)
{
  for (auto _ : state)
    benchmark::DoNotOptimize(mpendo::sweep_commutation(4, exec_of(state)));
}

void BM_LParamPartition(benchmark::State& state)
{
  mpendo::LParamSweepOptions opt;
  opt.trials = 200;
  for (auto _ : state)
    benchmark::DoNotOptimize(mpendo::sweep_lparam_partition(opt, exec_of(state)));
}

} // namespace

BENCHMARK(BM_LeviPreimages)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FiberBijection)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Commutation)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LParamPartition)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
