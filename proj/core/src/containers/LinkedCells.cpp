#include "lanemd/containers/LinkedCells.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lanemd/Errors.h"

namespace lanemd {

CellIndex3D CellGrid::coordinates(std::size_t index) const {
  const auto dims = dimsWithHalo();
  const auto x = static_cast<int>(index % static_cast<std::size_t>(dims[0]));
  index /= static_cast<std::size_t>(dims[0]);
  const auto y = static_cast<int>(index % static_cast<std::size_t>(dims[1]));
  const auto z = static_cast<int>(index / static_cast<std::size_t>(dims[1]));
  return {x - 1, y - 1, z - 1};
}

CellIndex3D CellGrid::cellOf(const Vec3 &x, bool halo) const {
  CellIndex3D c{};
  for (int d = 0; d < 3; ++d) {
    const auto raw = static_cast<int>(std::floor((x[d] - boxMin[d]) / cellLength[d]));
    const int lo = halo and haloAxis[d] ? -1 : 0;
    const int hi = halo and haloAxis[d] ? cellsPerAxis[d] : cellsPerAxis[d] - 1;
    c[d] = std::clamp(raw, lo, hi);
  }
  return c;
}

std::size_t CellGrid::maxParticlesPerCell() const {
  std::size_t result = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (isOwnedCell(coordinates(i))) result = std::max(result, cells[i].size());
  }
  return result;
}

CellGrid buildLinkedCells(const ParticleBuffer &particles, const SimulationBox &box, double cutoff, double skin) {
  box.validate();
  const double interaction = cutoff + skin;
  if (not(interaction > 0.)) throw InvalidParameterError("cutoff + skin must be positive");

  CellGrid grid;
  grid.boxMin = box.min;
  const auto length = box.length();
  for (int d = 0; d < 3; ++d) {
    if (length[d] < interaction and box.periodic(d)) {
      throw DegenerateDomainError("periodic axis " + std::to_string(d) + " is shorter than cutoff + skin");
    }
    grid.cellsPerAxis[d] = std::max(1, static_cast<int>(std::floor(length[d] / interaction)));
    grid.cellLength[d] = length[d] / grid.cellsPerAxis[d];
    grid.haloAxis[d] = box.periodic(d);
  }

  const auto dims = grid.dimsWithHalo();
  const auto total = static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(dims[2]);
  grid.cells.resize(total);
  grid.sources.resize(total);

  for (std::size_t k = 0; k < particles.size(); ++k) {
    const auto ownership = particles.ownership[k];
    if (ownership == Ownership::dummy) continue;
    const auto cell = grid.index(grid.cellOf(particles.position(k), ownership == Ownership::halo));
    grid.cells[cell].push_back(particles.particle(k));
    grid.sources[cell].push_back(k);
  }
  return grid;
}

}  // namespace lanemd
