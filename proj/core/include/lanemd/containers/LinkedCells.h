/**
 * @file LinkedCells.h
 * @brief Uniform cell grid for cutoff-based neighbor identification.
 */

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lanemd/particles/ParticleBuffer.h"
#include "lanemd/particles/SimulationBox.h"

namespace lanemd {

using CellIndex3D = std::array<int, 3>;

/**
 * Owned cells plus a halo ring of width one on every side.
 *
 * Cell coordinates run from -1 to cellsPerAxis[d] inclusive; owned cells are
 * [0, cellsPerAxis[d]). The ring is always allocated but only filled on
 * periodic axes. Each cell keeps, next to its buffer, the index of every entry
 * in the particle set the grid was built from.
 */
struct CellGrid {
  CellIndex3D cellsPerAxis{1, 1, 1};
  Vec3 cellLength{1., 1., 1.};
  Vec3 boxMin{0., 0., 0.};
  /// Axes whose halo ring takes part in traversals.
  std::array<bool, 3> haloAxis{false, false, false};
  std::vector<ParticleBuffer> cells;
  std::vector<std::vector<std::size_t>> sources;

  [[nodiscard]] CellIndex3D dimsWithHalo() const {
    return {cellsPerAxis[0] + 2, cellsPerAxis[1] + 2, cellsPerAxis[2] + 2};
  }
  [[nodiscard]] std::size_t numCells() const { return cells.size(); }

  /// Linear index of cell (x, y, z), each coordinate in [-1, cellsPerAxis].
  [[nodiscard]] std::size_t index(const CellIndex3D &c) const {
    const auto dims = dimsWithHalo();
    return static_cast<std::size_t>(c[0] + 1) +
           static_cast<std::size_t>(dims[0]) *
               (static_cast<std::size_t>(c[1] + 1) + static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(c[2] + 1));
  }
  [[nodiscard]] CellIndex3D coordinates(std::size_t index) const;
  [[nodiscard]] bool isOwnedCell(const CellIndex3D &c) const {
    for (int d = 0; d < 3; ++d) {
      if (c[d] < 0 or c[d] >= cellsPerAxis[d]) return false;
    }
    return true;
  }

  /// Cell that contains x. Owned particles clamp into owned cells, halo particles into the ring.
  [[nodiscard]] CellIndex3D cellOf(const Vec3 &x, bool halo) const;

  /// Largest number of particles in any owned cell.
  [[nodiscard]] std::size_t maxParticlesPerCell() const;
};

/**
 * Bins particles into cells of side at least cutoff + skin.
 *
 * cellsPerAxis is floor(box_length / (cutoff + skin)), at least 1. Entries
 * marked halo go into the halo ring. A periodic axis shorter than
 * cutoff + skin throws DegenerateDomainError; on a reflective axis the whole
 * extent then forms a single cell.
 */
CellGrid buildLinkedCells(const ParticleBuffer &particles, const SimulationBox &box, double cutoff, double skin);

}  // namespace lanemd
