/**
 * @file Scenario.h
 * @brief Scenario description and its flat text format.
 *
 * Format: one `key: value` per line, `#` starts a comment. Particle sources
 * are `object:` blocks whose keys follow on indented lines:
 *
 *     box_min: 0 0 0
 *     box_max: 200 200 200
 *     boundary: reflective
 *     cutoff: 2.5
 *     iterations: 1000
 *     object:
 *       origin: 90 90 90
 *       counts: 10 10 10
 *       spacing: 1.0
 *
 * Mandatory: box_min, box_max, cutoff, iterations and at least one object.
 */

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lanemd/particles/LJParams.h"
#include "lanemd/particles/Particle.h"
#include "lanemd/particles/SimulationBox.h"
#include "lanemd/tuning/AutoTuner.h"
#include "lanemd/tuning/Configuration.h"

namespace lanemd {

/// Cuboid simple cubic lattice.
struct CubeSource {
  Vec3 origin{0., 0., 0.};
  std::array<std::size_t, 3> counts{1, 1, 1};
  /// Below the 2^(1/6) sigma equilibrium distance, so the block is compressed.
  double spacing{1.};
  Vec3 velocity{0., 0., 0.};
  /// Standard deviation of a seeded Gaussian velocity perturbation.
  double velocityJitter{0.};
};

struct ScenarioSpec {
  SimulationBox box;
  LJParams params;
  std::vector<CubeSource> sources;
  std::size_t iterations{1};
  std::uint64_t seed{42};

  std::size_t vectorWidth{8};
  /// Cluster size of the Verlet Cluster Lists, equal to vectorWidth unless set.
  std::optional<std::size_t> clusterSize;
  std::size_t rebuildPeriod{20};

  TuningPolicy tuning;
  SearchSpaceOptions searchSpace;
  /// Skip tuning and run this configuration throughout.
  std::optional<Configuration> fixedConfig;
  std::string metric{"time"};

  std::string csvPath;
  std::string summaryPath;

  [[nodiscard]] std::size_t effectiveClusterSize() const { return clusterSize.value_or(vectorWidth); }

  /// Generates all source particles with sequential ids.
  [[nodiscard]] std::vector<Particle> generateParticles() const;

  /// Consistency checks across keys. Throws InvalidScenarioError.
  void validate() const;
};

ScenarioSpec parseScenarioText(std::string_view text);
ScenarioSpec parseScenario(const std::filesystem::path &path);

}  // namespace lanemd
