/**
 * @file Schedule.h
 * @brief Colored work schedules for the Linked Cells and cluster traversals.
 *
 * A schedule is a list of WorkUnits, each naming the two buffers handed to the
 * pair kernel. WorkUnits are grouped into base steps (all work anchored at one
 * base cell or base cluster, executed sequentially) and base steps into
 * colors. Base steps of the same color write disjoint buffers and may run
 * concurrently; colors run one after another.
 */

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "lanemd/containers/ClusterLists.h"
#include "lanemd/containers/LinkedCells.h"
#include "lanemd/particles/ParticleBuffer.h"

namespace lanemd {

enum class TraversalKind { lc_c01, lc_c08, lc_c18, vcl };

std::string_view toString(TraversalKind kind);
TraversalKind traversalKindFromString(std::string_view name);

/// Throws InvalidConfigurationError if kind cannot run with the given newton3 setting.
void checkTraversal(TraversalKind kind, bool newton3);

struct WorkUnit {
  std::size_t i{0};
  std::size_t j{0};
  bool sameBuffer{false};
  int color{0};
  std::size_t baseStep{0};
};

struct Schedule {
  TraversalKind kind{TraversalKind::lc_c01};
  bool newton3{false};
  int numColors{1};
  /// Sorted by color, then base step.
  std::vector<WorkUnit> units;
};

/**
 * Linked Cells schedule over the cells of a grid with the given shape.
 *
 * Buffer indices follow CellGrid::index. Halo ring cells take part only on
 * haloAxis axes, and only pairs with at least one owned cell are scheduled.
 * With newton3 every unordered adjacent pair appears once; without, every
 * ordered pair appears once (halo cells included as i, which keeps pair
 * counts exactly twice the newton3 ones).
 *
 *  - lc_c01: per base cell, itself and its 26 neighbors; one color. newton3 only off.
 *  - lc_c18: per base cell, itself and its 13 forward neighbors; 18 colors.
 *  - lc_c08: per 2x2x2 block, every pair whose componentwise minimum is the block origin; 8 colors.
 */
Schedule scheduleLinkedCells(const CellIndex3D &cellsPerAxis, const std::array<bool, 3> &haloAxis, TraversalKind kind,
                             bool newton3);
Schedule scheduleLinkedCells(const CellGrid &grid, TraversalKind kind, bool newton3);

/**
 * Cluster schedule: one base step per base cluster holding the intra-cluster
 * self unit and one unit per neighbor list entry, the base cluster as i.
 * Without newton3 a single color suffices; with it, base steps are greedily
 * colored so that equal colors write disjoint clusters.
 */
Schedule scheduleClusters(std::span<const Cluster> clusters, const ClusterNeighborLists &lists);

/// True iff, per color, no two base steps write a common buffer.
bool verifyColoring(const Schedule &schedule);

/**
 * Runs the schedule sequentially in color order, calling
 * pair(bufferI, bufferJ, sameBuffer) for every WorkUnit.
 */
template <class PairFunction>
void executeSchedule(const Schedule &schedule, std::span<ParticleBuffer> buffers, PairFunction &&pair) {
  for (const auto &unit : schedule.units) {
    pair(buffers[unit.i], buffers[unit.j], unit.sameBuffer);
  }
}

}  // namespace lanemd
