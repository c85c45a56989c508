#include <benchmark/benchmark.h>

#include <cmath>

#include "nidx/index.hpp"
#include "nidx/norm.hpp"
#include "nidx/operators.hpp"
#include "nidx/radius.hpp"

using namespace nidx;

namespace {

Norm octagon() { return Norm::polyhedral({{1.0, 0.0}, {std::sqrt(0.5), std::sqrt(0.5)}}); }

void BM_RadiusLp(benchmark::State& state) {
  RadiusEngine engine(Norm::lp(1.5));
  Operator2x2 t{0.3, 1.1, -0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(engine.numerical_radius(t));
}
BENCHMARK(BM_RadiusLp);

void BM_RadiusPolyhedral(benchmark::State& state) {
  RadiusEngine engine(octagon());
  Operator2x2 t{0.3, 1.1, -0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(engine.numerical_radius(t));
}
BENCHMARK(BM_RadiusPolyhedral);

void BM_OperatorNormLp(benchmark::State& state) {
  RadiusEngine engine(Norm::lp(2.5));
  Operator2x2 t{0.3, 1.1, -0.7, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(engine.operator_norm(t));
}
BENCHMARK(BM_OperatorNormLp);

void BM_MpConstant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(mp_constant(1.7).value);
}
BENCHMARK(BM_MpConstant);

void BM_IndexReportLp(benchmark::State& state) {
  Norm n = Norm::lp(1.5);
  for (auto _ : state) benchmark::DoNotOptimize(index_report(n).lower_bound);
}
BENCHMARK(BM_IndexReportLp);

void BM_IndexReportPolyhedral(benchmark::State& state) {
  Norm n = octagon();
  for (auto _ : state) benchmark::DoNotOptimize(index_report(n).lower_bound);
}
BENCHMARK(BM_IndexReportPolyhedral);

void BM_MinimaxOracle(benchmark::State& state) {
  ContactVector c{1.0, 0.7, 0.6, 0.3};
  for (auto _ : state) benchmark::DoNotOptimize(minimax_simplex_oracle(c));
}
BENCHMARK(BM_MinimaxOracle);

void BM_BruteForcePolyhedral(benchmark::State& state) {
  Norm n = octagon();
  for (auto _ : state) {
    benchmark::DoNotOptimize(brute_force_index(n, static_cast<int>(state.range(0))).value);
  }
}
BENCHMARK(BM_BruteForcePolyhedral)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
