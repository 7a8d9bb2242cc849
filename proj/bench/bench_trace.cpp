#include <benchmark/benchmark.h>

#include "gyb/braid.hpp"
#include "gyb/enhance.hpp"
#include "gyb/invariant.hpp"
#include "gyb/kernels.hpp"

namespace {

// One trace problem per strand count, built once and shared by both kernels.
struct Fixture {
  gyb::EgybOperator s = gyb::catalog_enhancement(gyb::OperatorId::Type1, 0.4);
  gyb::BraidWord braid;
  gyb::RepContext ctx;
  gyb::TraceProblem problem;

  explicit Fixture(int strands)
      : braid(gyb::random_braid(strands, 20, 7)), ctx(s, strands), problem(ctx.trace_problem(braid)) {}
};

void BM_TraceSerial(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gyb::trace_serial(f.problem));
  state.counters["dim"] = static_cast<double>(f.ctx.dim());
}

void BM_TraceOmp(benchmark::State& state) {
  Fixture f(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gyb::trace_omp(f.problem));
  state.counters["dim"] = static_cast<double>(f.ctx.dim());
}

BENCHMARK(BM_TraceSerial)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceOmp)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
