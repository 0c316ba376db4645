/**
 * @file Lattice.h
 * @brief Particle source generators for scenarios.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lanemd/particles/Particle.h"

namespace lanemd {

/**
 * Places counts[0]*counts[1]*counts[2] particles on a simple cubic lattice.
 *
 * x runs fastest. Ids are sequential starting at firstId, forces are zero and
 * every particle gets the velocity v0. Throws InvalidScenarioError for a zero
 * count or a non-positive spacing.
 */
std::vector<Particle> generateCubeLattice(const Vec3 &origin, const std::array<std::size_t, 3> &counts,
                                          double spacing, const Vec3 &v0, std::uint64_t firstId = 0);

/**
 * Adds a normally distributed velocity perturbation with standard deviation
 * stddev per component. Deterministic for a given seed.
 */
void addVelocityJitter(std::vector<Particle> &particles, double stddev, std::uint64_t seed);

}  // namespace lanemd
