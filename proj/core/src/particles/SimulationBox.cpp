#include "lanemd/particles/SimulationBox.h"

#include <cmath>
#include <string>

#include "lanemd/Errors.h"
#include "lanemd/particles/LJParams.h"

namespace lanemd {

std::string_view toString(BoundaryType type) {
  return type == BoundaryType::periodic ? "periodic" : "reflective";
}

BoundaryType boundaryTypeFromString(std::string_view name) {
  if (name == "periodic") return BoundaryType::periodic;
  if (name == "reflective") return BoundaryType::reflective;
  throw InvalidScenarioError("unknown boundary type '" + std::string(name) + "'");
}

bool SimulationBox::contains(const Vec3 &x) const {
  for (int d = 0; d < 3; ++d) {
    if (x[d] < min[d] or x[d] > max[d]) return false;
  }
  return true;
}

void SimulationBox::validate() const {
  for (int d = 0; d < 3; ++d) {
    if (not std::isfinite(min[d]) or not std::isfinite(max[d]) or not(max[d] > min[d])) {
      throw InvalidScenarioError("box max must be strictly greater than box min on axis " + std::to_string(d));
    }
  }
}

void LJParams::validate() const {
  const auto positive = [](double v, const char *name) {
    if (not std::isfinite(v) or v <= 0.) {
      throw InvalidParameterError(std::string(name) + " must be strictly positive");
    }
  };
  positive(epsilon, "epsilon");
  positive(sigma, "sigma");
  positive(cutoff, "cutoff");
  positive(mass, "mass");
  positive(dt, "dt");
  if (not std::isfinite(skin) or skin < 0.) {
    throw InvalidParameterError("skin must be non-negative");
  }
}

}  // namespace lanemd
