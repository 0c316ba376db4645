/**
 * @file Integrator.h
 * @brief Velocity-Verlet time integration split around the force phase.
 */

#pragma once

#include "lanemd/particles/LJParams.h"
#include "lanemd/particles/ParticleBuffer.h"

namespace lanemd {

enum class VerletPhase { preForce, postForce };

/**
 * preForce:  x += v dt + F/(2m) dt^2, oldF = F, F = 0
 * postForce: v += (F + oldF)/(2m) dt
 *
 * Throws DivergedSimulationError if a position or velocity becomes non-finite.
 */
void velocityVerletStep(ParticleBuffer &particles, const LJParams &params, VerletPhase phase);

}  // namespace lanemd
