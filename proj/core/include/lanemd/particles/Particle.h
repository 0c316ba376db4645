/**
 * @file Particle.h
 * @brief Array-of-structures particle representation.
 */

#pragma once

#include <cstdint>
#include <string_view>

#include "lanemd/particles/Vec3.h"

namespace lanemd {

/**
 * Ownership state of a particle slot.
 *
 * Halo particles are periodic images of owned particles. Dummy particles pad
 * fixed-size clusters and never contribute force to anything.
 */
enum class Ownership : std::uint8_t { owned = 0, halo = 1, dummy = 2 };

std::string_view toString(Ownership ownership);

struct Particle {
  std::uint64_t id{0};
  Vec3 position{0., 0., 0.};
  Vec3 velocity{0., 0., 0.};
  Vec3 force{0., 0., 0.};
  /// Force of the previous step, consumed by the velocity update.
  Vec3 oldForce{0., 0., 0.};
  Ownership ownership{Ownership::owned};

  bool operator==(const Particle &) const = default;
};

}  // namespace lanemd
