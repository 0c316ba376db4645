/**
 * @file SimulationBox.h
 */

#pragma once

#include <array>
#include <string_view>

#include "lanemd/particles/Vec3.h"

namespace lanemd {

enum class BoundaryType { reflective, periodic };

std::string_view toString(BoundaryType type);
BoundaryType boundaryTypeFromString(std::string_view name);

/**
 * Axis-aligned simulation domain with one boundary condition per axis.
 */
struct SimulationBox {
  Vec3 min{0., 0., 0.};
  Vec3 max{1., 1., 1.};
  std::array<BoundaryType, 3> boundary{BoundaryType::reflective, BoundaryType::reflective,
                                       BoundaryType::reflective};

  [[nodiscard]] Vec3 length() const { return vec::sub(max, min); }
  [[nodiscard]] bool periodic(int axis) const { return boundary[axis] == BoundaryType::periodic; }
  [[nodiscard]] bool anyPeriodic() const { return periodic(0) or periodic(1) or periodic(2); }
  [[nodiscard]] bool contains(const Vec3 &x) const;

  /// Throws InvalidScenarioError unless max > min on every axis.
  void validate() const;
};

}  // namespace lanemd
