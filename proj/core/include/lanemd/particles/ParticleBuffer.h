/**
 * @file ParticleBuffer.h
 * @brief Structure-of-arrays particle storage, the unit of kernel input.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lanemd/particles/Particle.h"

namespace lanemd {

/**
 * Every property lives in its own contiguous array. Entry k of each array
 * belongs to the same particle, and all arrays always have the same length.
 */
class ParticleBuffer {
 public:
  ParticleBuffer() = default;

  [[nodiscard]] std::size_t size() const noexcept { return posX.size(); }
  [[nodiscard]] bool empty() const noexcept { return posX.empty(); }

  void reserve(std::size_t n);
  void clear();
  void resize(std::size_t n);
  void push_back(const Particle &p);

  /// Reconstructs the AoS view of entry k.
  [[nodiscard]] Particle particle(std::size_t k) const;
  void setParticle(std::size_t k, const Particle &p);

  [[nodiscard]] Vec3 position(std::size_t k) const { return {posX[k], posY[k], posZ[k]}; }
  [[nodiscard]] Vec3 velocity(std::size_t k) const { return {velX[k], velY[k], velZ[k]}; }
  [[nodiscard]] Vec3 force(std::size_t k) const { return {forceX[k], forceY[k], forceZ[k]}; }

  void setPosition(std::size_t k, const Vec3 &x) {
    posX[k] = x[0];
    posY[k] = x[1];
    posZ[k] = x[2];
  }
  void setVelocity(std::size_t k, const Vec3 &v) {
    velX[k] = v[0];
    velY[k] = v[1];
    velZ[k] = v[2];
  }
  void setForce(std::size_t k, const Vec3 &f) {
    forceX[k] = f[0];
    forceY[k] = f[1];
    forceZ[k] = f[2];
  }

  void zeroForces();

  /// True iff all property arrays have the same length.
  [[nodiscard]] bool consistent() const noexcept;

  std::vector<double> posX, posY, posZ;
  std::vector<double> velX, velY, velZ;
  std::vector<double> forceX, forceY, forceZ;
  std::vector<double> oldForceX, oldForceY, oldForceZ;
  std::vector<std::uint64_t> id;
  std::vector<Ownership> ownership;
};

ParticleBuffer soaFromParticles(std::span<const Particle> particles);
std::vector<Particle> particlesFromSoa(const ParticleBuffer &buffer);

}  // namespace lanemd
