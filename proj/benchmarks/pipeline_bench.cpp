#include <benchmark/benchmark.h>

#include <map>

#include "zzpers/duality.hpp"
#include "zzpers/extended.hpp"
#include "zzpers/generate.hpp"
#include "zzpers/oracle/oracle.hpp"
#include "zzpers/pipeline.hpp"
#include "zzpers/reduction.hpp"

using namespace zzp;

namespace {

// Torus height filtration with rows*cols*6 simplices and a few thousand
// switches, cached per size since generating it is not what we measure.
const ZigzagFiltration& torus_filtration(std::size_t rows) {
  static std::map<std::size_t, ZigzagFiltration> cache;
  auto it = cache.find(rows);
  if (it == cache.end()) {
    GenerateOptions opt;
    opt.switches = rows * 40;
    opt.seed = 1;
    it = cache.emplace(rows, generate(torus_mesh(rows, rows), opt).filtration).first;
  }
  return it->second;
}

void BM_Pipeline(benchmark::State& state) {
  const ZigzagFiltration& f = torus_filtration(static_cast<std::size_t>(state.range(0)));
  PhaseTimings t;
  for (auto _ : state) benchmark::DoNotOptimize(zigzag_pipeline(f, &t));
  state.counters["m"] = static_cast<double>(f.size());
  state.counters["reduce_share"] = t.total() > 0 ? t.reduce / t.total() : 0;
  state.SetComplexityN(static_cast<benchmark::IterationCount>(f.size()));
}
BENCHMARK(BM_Pipeline)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ToUpdown(benchmark::State& state) {
  const ZigzagFiltration& f = torus_filtration(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(to_updown(f));
  state.SetComplexityN(static_cast<benchmark::IterationCount>(f.size()));
}
BENCHMARK(BM_ToUpdown)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond)->Complexity();

void BM_ExtendedReduction(benchmark::State& state) {
  const ZigzagFiltration U = to_updown(torus_filtration(static_cast<std::size_t>(state.range(0)))).filtration;
  const auto strategy = state.range(1) ? ReductionStrategy::Twist : ReductionStrategy::Standard;
  for (auto _ : state) benchmark::DoNotOptimize(reduce_matrix(extended_boundary_matrix(U), strategy));
}
BENCHMARK(BM_ExtendedReduction)
    ->ArgsProduct({{16, 32, 64}, {0, 1}})
    ->ArgNames({"rows", "twist"})
    ->Unit(benchmark::kMillisecond);

void BM_Duality(benchmark::State& state) {
  const Barcode abs = zigzag_barcode(torus_filtration(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(absolute_to_relative(abs));
}
BENCHMARK(BM_Duality)->Arg(32)->Arg(128);

// The brute-force oracle, for a sense of how far the cross-checks scale.
void BM_OracleSmall(benchmark::State& state) {
  GenerateOptions opt;
  opt.switches = 20;
  const ZigzagFiltration f = generate(torus_mesh(3, static_cast<std::size_t>(state.range(0))), opt).filtration;
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_absolute(f));
  state.counters["m"] = static_cast<double>(f.size());
}
BENCHMARK(BM_OracleSmall)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
