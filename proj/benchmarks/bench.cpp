#include <benchmark/benchmark.h>

#include "exint/hgen.hpp"
#include "exint/mpa.hpp"
#include "exint/ness.hpp"
#include "exint/rmat.hpp"

using namespace exint;

namespace {

const Scalar kLambda = Scalar::parse("3/7");
const Scalar kMu = Scalar::parse("1/5");

void bm_monodromy_walk(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(monodromy_element(n, 0, 0, kLambda));
  }
}
BENCHMARK(bm_monodromy_walk)->Arg(6)->Arg(8);

void bm_r_block(benchmark::State& state) {
  const int alpha = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_r(kLambda, kMu, alpha));
  }
}
BENCHMARK(bm_r_block)->Arg(8)->Arg(10);

void bm_generator_forms(benchmark::State& state) {
  const int alpha = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(h_first(alpha, kLambda));
    benchmark::DoNotOptimize(h_compact(alpha, kLambda));
  }
}
BENCHMARK(bm_generator_forms)->Arg(6)->Arg(10);

void bm_steady_state(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const LindbladProblem problem = make_problem(n, make_rational(1, 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_ness(problem));
  }
}
BENCHMARK(bm_steady_state)->Arg(4)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
