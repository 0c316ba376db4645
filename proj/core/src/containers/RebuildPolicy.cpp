#include "lanemd/containers/RebuildPolicy.h"

namespace lanemd {

std::vector<Vec3> capturePositions(const ParticleBuffer &particles) {
  std::vector<Vec3> positions;
  positions.reserve(particles.size());
  for (std::size_t k = 0; k < particles.size(); ++k) positions.push_back(particles.position(k));
  return positions;
}

bool needsRebuild(const ParticleBuffer &particles, std::span<const Vec3> reference, double skin,
                  std::size_t iterationsSinceRebuild, std::size_t rebuildPeriod) {
  if (iterationsSinceRebuild >= rebuildPeriod) return true;
  if (reference.size() != particles.size()) return true;

  const double threshold = 0.5 * skin;
  const double threshold2 = threshold * threshold;
  for (std::size_t k = 0; k < particles.size(); ++k) {
    const auto d = vec::sub(particles.position(k), reference[k]);
    if (vec::dot(d, d) >= threshold2) return true;
  }
  return false;
}

}  // namespace lanemd
