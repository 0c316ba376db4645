/**
 * @file Boundaries.h
 */

#pragma once

#include <cstddef>

#include "lanemd/particles/ParticleBuffer.h"
#include "lanemd/particles/SimulationBox.h"

namespace lanemd {

/**
 * Brings every owned particle back into the box.
 *
 * Reflective axes mirror the position about the violated face and negate the
 * velocity component. Periodic axes wrap the position into [min, max).
 * A particle more than one box length outside throws DivergedSimulationError.
 *
 * @return number of particles that were moved
 */
std::size_t applyBoundaries(ParticleBuffer &particles, const SimulationBox &box);

}  // namespace lanemd
