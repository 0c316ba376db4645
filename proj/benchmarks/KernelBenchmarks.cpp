/**
 * @file KernelBenchmarks.cpp
 * @brief Throughput of the pair kernel patterns and of full force phases per traversal.
 */

#include <benchmark/benchmark.h>

#include <random>

#include "lanemd/kernels/LJKernel.h"
#include "lanemd/sim/ForcePipeline.h"

using namespace lanemd;

namespace {

ParticleBuffer randomBlock(std::size_t n, double side, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0., side);
  ParticleBuffer buffer;
  for (std::size_t k = 0; k < n; ++k) {
    Particle p;
    p.id = k;
    p.position = {coord(rng), coord(rng), coord(rng)};
    buffer.push_back(p);
  }
  return buffer;
}

void pairKernel(benchmark::State &state) {
  const auto pattern = allPatterns[static_cast<std::size_t>(state.range(0))];
  const auto n = static_cast<std::size_t>(state.range(1));
  const LJParams params;
  auto a = randomBlock(n, 3., 1);
  auto b = randomBlock(n, 3., 2);
  for (auto &x : b.posX) x += 3.;
  KernelStats stats;
  for (auto _ : state) {
    computePairVectorized(a, b, params, true, false, pattern, 8, stats);
    benchmark::DoNotOptimize(a.forceX.data());
  }
  state.SetLabel(std::string(toString(pattern)));
  state.counters["blank_fraction"] =
      static_cast<double>(stats.blankLanes) / static_cast<double>(std::max<std::uint64_t>(stats.laneSlots, 1));
}
BENCHMARK(pairKernel)->ArgsProduct({{0, 1, 2, 3}, {5, 8, 27}});

void forcePhase(benchmark::State &state) {
  const auto space = enumerateSearchSpace({});
  const auto config = space[static_cast<std::size_t>(state.range(0))];
  SimulationBox box;
  box.max = {15., 15., 15.};
  const LJParams params;
  // density near one, minimum distances are not enforced
  auto owned = randomBlock(3000, 15., 3);
  ForcePipeline pipeline(box, params, PipelineOptions{});
  pipeline.prepare(owned, config);
  for (auto _ : state) {
    owned.zeroForces();
    benchmark::DoNotOptimize(pipeline.computeForces(owned, config));
  }
  state.SetLabel(config.toString());
}
BENCHMARK(forcePhase)->DenseRange(0, 27)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
