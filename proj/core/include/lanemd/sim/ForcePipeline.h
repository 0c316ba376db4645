/**
 * @file ForcePipeline.h
 * @brief Container upkeep and the force phase for one Configuration.
 */

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lanemd/containers/ClusterLists.h"
#include "lanemd/containers/LinkedCells.h"
#include "lanemd/kernels/KernelStats.h"
#include "lanemd/particles/Halo.h"
#include "lanemd/particles/LJParams.h"
#include "lanemd/particles/ParticleBuffer.h"
#include "lanemd/particles/SimulationBox.h"
#include "lanemd/traversals/Schedule.h"
#include "lanemd/tuning/Configuration.h"

namespace lanemd {

struct PipelineOptions {
  std::size_t vectorWidth{8};
  std::size_t clusterSize{8};
  std::size_t rebuildPeriod{20};
  /// Run the scalar reference kernel instead of the vectorized one.
  bool scalarKernel{false};
};

/**
 * Keeps one Linked Cells grid and one cluster set alive across iterations.
 *
 * Each container is rebuilt only when needsRebuild fires for it. Halo images
 * are recomputed on every rebuild with range cutoff + skin and their positions
 * refreshed from the owners on every force phase. Between rebuilds container
 * buffers are refreshed from the owned particles by index, so only the
 * structure goes stale, never the coordinates.
 */
class ForcePipeline {
 public:
  ForcePipeline(const SimulationBox &box, const LJParams &params, PipelineOptions options);

  /// Rebuilds the structure config needs if it is stale. Returns true if it rebuilt.
  bool prepare(const ParticleBuffer &owned, const Configuration &config);

  /**
   * Traversal and kernels: loads current positions into the container,
   * executes the schedule and adds the resulting forces to owned.
   */
  KernelStats computeForces(ParticleBuffer &owned, const Configuration &config);

  /// Marks the end of an iteration for the rebuild period.
  void endIteration();

  [[nodiscard]] std::size_t rebuilds() const { return _rebuilds; }
  [[nodiscard]] const PipelineOptions &options() const { return _options; }

 private:
  struct ContainerState {
    bool valid{false};
    std::vector<Vec3> reference;
    std::size_t sinceRebuild{0};
    std::vector<HaloImage> halo;
  };

  struct LinkedCellsState : ContainerState {
    CellGrid grid;
    std::map<std::pair<TraversalKind, bool>, Schedule> schedules;
  };

  struct ClusterState : ContainerState {
    std::vector<Cluster> clusters;
    std::vector<ParticleBuffer> buffers;
    std::vector<std::vector<std::size_t>> sources;
    std::map<bool, std::pair<ClusterNeighborLists, Schedule>> byNewton3;
  };

  ContainerState &state(ContainerKind kind);
  ParticleBuffer withHalo(const ParticleBuffer &owned, std::vector<HaloImage> &halo) const;
  const Schedule &schedule(const Configuration &config);

  SimulationBox _box;
  LJParams _params;
  PipelineOptions _options;
  LinkedCellsState _cells;
  ClusterState _clusters;
  std::size_t _rebuilds{0};
};

}  // namespace lanemd
