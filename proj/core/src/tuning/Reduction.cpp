#include "lanemd/tuning/Reduction.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "lanemd/Errors.h"

namespace lanemd {

std::string_view toString(Reduction reduction) {
  switch (reduction) {
    case Reduction::mean:
      return "mean";
    case Reduction::min:
      return "min";
    case Reduction::median:
      return "median";
  }
  return "unknown";
}

Reduction reductionFromString(std::string_view name) {
  for (auto r : {Reduction::mean, Reduction::min, Reduction::median}) {
    if (toString(r) == name) return r;
  }
  throw InvalidParameterError("unknown reduction '" + std::string(name) + "'");
}

double reduceSamples(std::span<const double> samples, Reduction reduction) {
  if (samples.empty()) throw InvalidParameterError("cannot reduce an empty sample set");
  switch (reduction) {
    case Reduction::mean:
      return std::accumulate(samples.begin(), samples.end(), 0.) / static_cast<double>(samples.size());
    case Reduction::min:
      return *std::min_element(samples.begin(), samples.end());
    case Reduction::median: {
      std::vector<double> sorted(samples.begin(), samples.end());
      std::sort(sorted.begin(), sorted.end());
      const auto mid = sorted.size() / 2;
      return sorted.size() % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
    }
  }
  return 0.;
}

}  // namespace lanemd
