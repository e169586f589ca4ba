// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "toric/arrangement.hpp"
#include "toric/forms.hpp"
#include "toric/poset.hpp"

using namespace toric;

namespace {

ToricArrangement arrangement_for(std::int64_t code) {
  switch (code) {
    case 0: return weyl(WeylFamily::B, 3);
    case 1: return weyl(WeylFamily::D, 4);
    case 2: return braid(5);
    default: return weyl(WeylFamily::A, 4);
  }
}

// All codimension-2 cuts: the widest layer expansion of the poset build.
std::vector<Component> first_layer(const ToricArrangement& a) {
  std::vector<Component> layer{Component::torus(a.dimension())};
  return kernels::expand_layer_serial(a, layer);
}

void BM_ExpandLayerSerial(benchmark::State& state) {
  ToricArrangement a = arrangement_for(state.range(0));
  auto layer = first_layer(a);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::expand_layer_serial(a, layer));
  state.SetLabel(std::to_string(a.size()) + " hypersurfaces");
}

void BM_ExpandLayerOmp(benchmark::State& state) {
  ToricArrangement a = arrangement_for(state.range(0));
  auto layer = first_layer(a);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::expand_layer_omp(a, layer));
  state.SetLabel(std::to_string(a.size()) + " hypersurfaces");
}

void BM_ConnectedSerial(benchmark::State& state) {
  ToricArrangement a = arrangement_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::all_intersections_connected_serial(a));
}

void BM_ConnectedOmp(benchmark::State& state) {
  ToricArrangement a = arrangement_for(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::all_intersections_connected_omp(a));
}

void BM_EvaluationSerial(benchmark::State& state) {
  ToricArrangement a = weyl(WeylFamily::B, 3);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluation_matrix_serial(a, samples, 0));
}

void BM_EvaluationOmp(benchmark::State& state) {
  ToricArrangement a = weyl(WeylFamily::B, 3);
  const auto samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::evaluation_matrix_omp(a, samples, 0));
}

}  // namespace

BENCHMARK(BM_ExpandLayerSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpandLayerOmp)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectedSerial)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConnectedOmp)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluationSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluationOmp)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
