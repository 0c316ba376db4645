#include "lanemd/particles/Boundaries.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "lanemd/Errors.h"

namespace lanemd {

namespace {

[[noreturn]] void diverged(const ParticleBuffer &particles, std::size_t k, int axis) {
  throw DivergedSimulationError("particle " + std::to_string(particles.id[k]) + " left the box on axis " +
                                std::to_string(axis) + " by more than one box length");
}

}  // namespace

std::size_t applyBoundaries(ParticleBuffer &particles, const SimulationBox &box) {
  const auto length = box.length();
  std::size_t moved = 0;

  for (std::size_t k = 0; k < particles.size(); ++k) {
    bool touched = false;
    for (int d = 0; d < 3; ++d) {
      auto &x = d == 0 ? particles.posX[k] : (d == 1 ? particles.posY[k] : particles.posZ[k]);
      auto &v = d == 0 ? particles.velX[k] : (d == 1 ? particles.velY[k] : particles.velZ[k]);
      if (not std::isfinite(x)) {
        throw DivergedSimulationError("particle " + std::to_string(particles.id[k]) + " has a non-finite position");
      }
      const double lo = box.min[d];
      const double hi = box.max[d];
      if (x >= lo and x < hi) continue;
      if (x > hi + length[d] or x < lo - length[d]) diverged(particles, k, d);

      if (box.periodic(d)) {
        x += x >= hi ? -length[d] : length[d];
        // rounding may land exactly on max
        if (x >= hi) x = lo;
        touched = true;
      } else if (x >= hi) {
        // the upper face itself is outside the half-open box
        x = std::min(2. * hi - x, std::nextafter(hi, lo));
        v = -v;
        touched = true;
      } else if (x < lo) {
        x = 2. * lo - x;
        v = -v;
        touched = true;
      }
    }
    moved += touched ? 1 : 0;
  }
  return moved;
}

}  // namespace lanemd
