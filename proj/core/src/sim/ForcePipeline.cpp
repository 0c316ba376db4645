#include "lanemd/sim/ForcePipeline.h"

#include "lanemd/Errors.h"
#include "lanemd/containers/RebuildPolicy.h"
#include "lanemd/kernels/LJKernel.h"

namespace lanemd {

namespace {

/// Copies current coordinates into container buffers and clears their forces.
void loadBuffers(std::span<ParticleBuffer> buffers, std::span<const std::vector<std::size_t>> sources,
                 const ParticleBuffer &owned, std::span<const HaloImage> halo) {
  const auto numOwned = owned.size();
  for (std::size_t b = 0; b < buffers.size(); ++b) {
    auto &buffer = buffers[b];
    const auto &src = sources[b];
    for (std::size_t k = 0; k < src.size(); ++k) {
      const auto s = src[k];
      if (s == dummySource) continue;
      if (s < numOwned) {
        buffer.posX[k] = owned.posX[s];
        buffer.posY[k] = owned.posY[s];
        buffer.posZ[k] = owned.posZ[s];
      } else {
        const auto &image = halo[s - numOwned];
        buffer.posX[k] = owned.posX[image.owner] + image.shift[0];
        buffer.posY[k] = owned.posY[image.owner] + image.shift[1];
        buffer.posZ[k] = owned.posZ[image.owner] + image.shift[2];
      }
    }
    buffer.zeroForces();
  }
}

/// Adds forces of owned entries back; halo and dummy forces are dropped.
void extractForces(std::span<const ParticleBuffer> buffers, std::span<const std::vector<std::size_t>> sources,
                   ParticleBuffer &owned) {
  const auto numOwned = owned.size();
  for (std::size_t b = 0; b < buffers.size(); ++b) {
    const auto &buffer = buffers[b];
    const auto &src = sources[b];
    for (std::size_t k = 0; k < src.size(); ++k) {
      const auto s = src[k];
      if (s >= numOwned) continue;
      owned.forceX[s] += buffer.forceX[k];
      owned.forceY[s] += buffer.forceY[k];
      owned.forceZ[s] += buffer.forceZ[k];
    }
  }
}

}  // namespace

ForcePipeline::ForcePipeline(const SimulationBox &box, const LJParams &params, PipelineOptions options)
    : _box(box), _params(params), _options(options) {
  _box.validate();
  _params.validate();
  checkVectorWidth(_options.vectorWidth);
  if (_options.clusterSize < 2) throw InvalidParameterError("cluster size must be at least 2");
}

ForcePipeline::ContainerState &ForcePipeline::state(ContainerKind kind) {
  return kind == ContainerKind::linkedCells ? static_cast<ContainerState &>(_cells)
                                            : static_cast<ContainerState &>(_clusters);
}

ParticleBuffer ForcePipeline::withHalo(const ParticleBuffer &owned, std::vector<HaloImage> &halo) const {
  halo = buildHaloImages(owned, _box, _params.interactionLength());
  ParticleBuffer combined = owned;
  combined.reserve(owned.size() + halo.size());
  for (const auto &image : halo) {
    auto p = owned.particle(image.owner);
    p.position = vec::add(p.position, image.shift);
    p.ownership = Ownership::halo;
    combined.push_back(p);
  }
  return combined;
}

bool ForcePipeline::prepare(const ParticleBuffer &owned, const Configuration &config) {
  if (not isValid(config)) throw InvalidConfigurationError("invalid configuration " + config.toString());
  auto &s = state(config.container);
  if (s.valid and not needsRebuild(owned, s.reference, _params.skin, s.sinceRebuild, _options.rebuildPeriod)) {
    return false;
  }

  const auto combined = withHalo(owned, s.halo);
  if (config.container == ContainerKind::linkedCells) {
    _cells.grid = buildLinkedCells(combined, _box, _params.cutoff, _params.skin);
    _cells.schedules.clear();
  } else {
    _clusters.clusters = buildClusters(combined, _options.clusterSize);
    _clusters.buffers.clear();
    _clusters.sources.clear();
    for (const auto &cluster : _clusters.clusters) {
      _clusters.buffers.push_back(cluster.particles);
      _clusters.sources.push_back(cluster.sources);
    }
    _clusters.byNewton3.clear();
  }
  s.reference = capturePositions(owned);
  s.sinceRebuild = 0;
  s.valid = true;
  ++_rebuilds;
  return true;
}

const Schedule &ForcePipeline::schedule(const Configuration &config) {
  if (config.container == ContainerKind::linkedCells) {
    const auto key = std::make_pair(config.traversal, config.newton3);
    auto it = _cells.schedules.find(key);
    if (it == _cells.schedules.end()) {
      it = _cells.schedules.emplace(key, scheduleLinkedCells(_cells.grid, config.traversal, config.newton3)).first;
    }
    return it->second;
  }
  auto it = _clusters.byNewton3.find(config.newton3);
  if (it == _clusters.byNewton3.end()) {
    auto lists = buildClusterNeighborLists(_clusters.clusters, _params.interactionLength(), config.newton3);
    auto sched = scheduleClusters(_clusters.clusters, lists);
    it = _clusters.byNewton3.emplace(config.newton3, std::make_pair(std::move(lists), std::move(sched))).first;
  }
  return it->second.second;
}

KernelStats ForcePipeline::computeForces(ParticleBuffer &owned, const Configuration &config) {
  auto &s = state(config.container);
  if (not s.valid) prepare(owned, config);

  PairKernel kernel = _options.scalarKernel
                          ? PairKernel(_params, config.newton3)
                          : PairKernel(_params, config.newton3, _options.vectorWidth, config.pattern);
  const auto &sched = schedule(config);

  if (config.container == ContainerKind::linkedCells) {
    loadBuffers(_cells.grid.cells, _cells.grid.sources, owned, _cells.halo);
    executeSchedule(sched, std::span<ParticleBuffer>(_cells.grid.cells), kernel);
    extractForces(_cells.grid.cells, _cells.grid.sources, owned);
  } else {
    loadBuffers(_clusters.buffers, _clusters.sources, owned, _clusters.halo);
    executeSchedule(sched, std::span<ParticleBuffer>(_clusters.buffers), kernel);
    extractForces(_clusters.buffers, _clusters.sources, owned);
  }
  return kernel.stats();
}

void ForcePipeline::endIteration() {
  ++_cells.sinceRebuild;
  ++_clusters.sinceRebuild;
}

}  // namespace lanemd
