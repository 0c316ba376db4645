#include "lanemd/particles/Halo.h"

namespace lanemd {

std::vector<HaloImage> buildHaloImages(const ParticleBuffer &owned, const SimulationBox &box, double range) {
  std::vector<HaloImage> images;
  if (not box.anyPeriodic()) return images;

  const auto length = box.length();
  for (std::size_t k = 0; k < owned.size(); ++k) {
    const auto x = owned.position(k);
    // candidate shifts per axis, 0 always first
    std::array<std::array<double, 3>, 3> options{};
    std::array<int, 3> numOptions{1, 1, 1};
    for (int d = 0; d < 3; ++d) {
      options[d][0] = 0.;
      if (not box.periodic(d)) continue;
      if (x[d] - box.min[d] < range) options[d][numOptions[d]++] = length[d];
      if (box.max[d] - x[d] < range) options[d][numOptions[d]++] = -length[d];
    }
    for (int a = 0; a < numOptions[0]; ++a) {
      for (int b = 0; b < numOptions[1]; ++b) {
        for (int c = 0; c < numOptions[2]; ++c) {
          if (a == 0 and b == 0 and c == 0) continue;
          images.push_back({k, {options[0][a], options[1][b], options[2][c]}});
        }
      }
    }
  }
  return images;
}

std::vector<Particle> buildHalo(const ParticleBuffer &owned, const SimulationBox &box, double range) {
  std::vector<Particle> halo;
  for (const auto &image : buildHaloImages(owned, box, range)) {
    auto p = owned.particle(image.owner);
    p.position = vec::add(p.position, image.shift);
    p.force = {0., 0., 0.};
    p.oldForce = {0., 0., 0.};
    p.ownership = Ownership::halo;
    halo.push_back(p);
  }
  return halo;
}

}  // namespace lanemd
