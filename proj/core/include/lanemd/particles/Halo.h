/**
 * @file Halo.h
 * @brief Periodic images of owned particles.
 */

#pragma once

#include <cstddef>
#include <vector>

#include "lanemd/particles/ParticleBuffer.h"
#include "lanemd/particles/SimulationBox.h"

namespace lanemd {

/**
 * One periodic image: the owner's position shifted by an integer combination
 * of box vectors.
 */
struct HaloImage {
  std::size_t owner;
  Vec3 shift;
};

/**
 * Images of every owned particle that lies within range of a periodic face.
 * Edge and corner regions yield the combined images (up to 7 per particle).
 * Returns nothing if no axis is periodic.
 */
std::vector<HaloImage> buildHaloImages(const ParticleBuffer &owned, const SimulationBox &box, double range);

/// Materialized halo particles; ids are copied from the owner.
std::vector<Particle> buildHalo(const ParticleBuffer &owned, const SimulationBox &box, double range);

}  // namespace lanemd
