#include <benchmark/benchmark.h>

#include "powerlog/airy.hpp"
#include "powerlog/interp.hpp"
#include "powerlog/radial_solver.hpp"

using namespace powerlog;

static void BM_SolveEigenvalue(benchmark::State& state) {
  const auto spec = PotentialSpec::power(0.5);
  const QuantumNumbers qn(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(solve_eigenvalue(spec, qn).energy);
}
BENCHMARK(BM_SolveEigenvalue)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_SolveLog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_eigenvalue(PotentialSpec::log(), QuantumNumbers(1, 0)).energy);
}
BENCHMARK(BM_SolveLog)->Unit(benchmark::kMillisecond);

static void BM_SturmCount(benchmark::State& state) {
  const auto t = detail::radial_matrix(PotentialSpec::power(1.0), 0, 16.0, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(detail::sturm_count(t, 4.0));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SturmCount)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_AiryZero(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(airy_zero(k).location);
}
BENCHMARK(BM_AiryZero)->Arg(1)->Arg(20);

static void BM_ApproxEnergy(benchmark::State& state) {
  PDataset data;
  NodeValues v;
  v.p = {1.0, 1.21867, 1.37608, 1.5};
  v.provenance = {Provenance::kExactFormula, Provenance::kSolver, Provenance::kAiry, Provenance::kExactFormula};
  data.insert(QuantumNumbers(1, 0), v);
  double q = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(approx_energy(QuantumNumbers(1, 0), q, data));
    q = q > 1.9 ? -0.9 : q + 0.01;
  }
}
BENCHMARK(BM_ApproxEnergy);

static void BM_BuildDataset(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_p_dataset(5, 5).size());
}
BENCHMARK(BM_BuildDataset)->Unit(benchmark::kMillisecond)->Iterations(3);

BENCHMARK_MAIN();
