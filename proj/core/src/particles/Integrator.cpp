#include "lanemd/particles/Integrator.h"

#include <cmath>
#include <string>

#include "lanemd/Errors.h"

namespace lanemd {

void velocityVerletStep(ParticleBuffer &p, const LJParams &params, VerletPhase phase) {
  const double dt = params.dt;
  const std::size_t n = p.size();

  if (phase == VerletPhase::preForce) {
    const double c = dt * dt / (2. * params.mass);
    for (std::size_t k = 0; k < n; ++k) {
      p.posX[k] += p.velX[k] * dt + p.forceX[k] * c;
      p.posY[k] += p.velY[k] * dt + p.forceY[k] * c;
      p.posZ[k] += p.velZ[k] * dt + p.forceZ[k] * c;
      p.oldForceX[k] = p.forceX[k];
      p.oldForceY[k] = p.forceY[k];
      p.oldForceZ[k] = p.forceZ[k];
      if (not(std::isfinite(p.posX[k]) and std::isfinite(p.posY[k]) and std::isfinite(p.posZ[k]))) {
        throw DivergedSimulationError("non-finite position for particle " + std::to_string(p.id[k]));
      }
    }
    p.zeroForces();
    return;
  }

  const double c = dt / (2. * params.mass);
  for (std::size_t k = 0; k < n; ++k) {
    p.velX[k] += (p.forceX[k] + p.oldForceX[k]) * c;
    p.velY[k] += (p.forceY[k] + p.oldForceY[k]) * c;
    p.velZ[k] += (p.forceZ[k] + p.oldForceZ[k]) * c;
    if (not(std::isfinite(p.velX[k]) and std::isfinite(p.velY[k]) and std::isfinite(p.velZ[k]))) {
      throw DivergedSimulationError("non-finite velocity for particle " + std::to_string(p.id[k]));
    }
  }
}

}  // namespace lanemd
