#include "lanemd/particles/Lattice.h"

#include <cmath>
#include <random>

#include "lanemd/Errors.h"

namespace lanemd {

std::vector<Particle> generateCubeLattice(const Vec3 &origin, const std::array<std::size_t, 3> &counts,
                                          double spacing, const Vec3 &v0, std::uint64_t firstId) {
  if (counts[0] == 0 or counts[1] == 0 or counts[2] == 0) {
    throw InvalidScenarioError("lattice counts must be at least 1 on every axis");
  }
  if (not std::isfinite(spacing) or spacing <= 0.) {
    throw InvalidScenarioError("lattice spacing must be strictly positive");
  }

  std::vector<Particle> particles;
  particles.reserve(counts[0] * counts[1] * counts[2]);
  auto id = firstId;
  for (std::size_t z = 0; z < counts[2]; ++z) {
    for (std::size_t y = 0; y < counts[1]; ++y) {
      for (std::size_t x = 0; x < counts[0]; ++x) {
        Particle p;
        p.id = id++;
        p.position = {origin[0] + static_cast<double>(x) * spacing, origin[1] + static_cast<double>(y) * spacing,
                      origin[2] + static_cast<double>(z) * spacing};
        p.velocity = v0;
        particles.push_back(p);
      }
    }
  }
  return particles;
}

void addVelocityJitter(std::vector<Particle> &particles, double stddev, std::uint64_t seed) {
  if (stddev <= 0.) return;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0., stddev);
  for (auto &p : particles) {
    for (auto &v : p.velocity) {
      v += normal(rng);
    }
  }
}

}  // namespace lanemd
