/**
 * @file RebuildPolicy.h
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lanemd/particles/ParticleBuffer.h"

namespace lanemd {

/// Iterations after which neighbor structures are rebuilt regardless of motion.
inline constexpr std::size_t defaultRebuildPeriod = 20;

std::vector<Vec3> capturePositions(const ParticleBuffer &particles);

/**
 * True iff any particle moved at least skin/2 since the reference positions
 * were captured, or rebuildPeriod iterations have elapsed.
 */
bool needsRebuild(const ParticleBuffer &particles, std::span<const Vec3> reference, double skin,
                  std::size_t iterationsSinceRebuild, std::size_t rebuildPeriod = defaultRebuildPeriod);

}  // namespace lanemd
