#include "lanemd/tuning/MetricProvider.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <string>

#include "lanemd/Errors.h"

namespace lanemd {

void WallClockMetric::beginRegion() { _start = std::chrono::steady_clock::now(); }

double WallClockMetric::endRegion(const KernelStats &) {
  const auto elapsed = std::chrono::steady_clock::now() - _start;
  return static_cast<double>(std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
}

double LaneOpMetric::endRegion(const KernelStats &regionStats) { return static_cast<double>(regionStats.laneSlots); }

ReplayMetric::ReplayMetric(std::vector<double> values) : _values(std::move(values)) {
  for (const double v : _values) {
    if (not std::isfinite(v) or v < 0.) throw ParseError("replay values must be non-negative");
  }
}

ReplayMetric ReplayMetric::fromFile(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (not in) throw IoError("cannot open metric replay file " + path.string());
  std::vector<double> values;
  std::string line;
  std::size_t lineNumber = 0;
  while (std::getline(in, line)) {
    ++lineNumber;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const char *begin = line.data() + first;
    const char *end = line.data() + last + 1;
    double value = 0.;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() or ptr != end or not std::isfinite(value) or value < 0.) {
      throw ParseError(path.string() + ":" + std::to_string(lineNumber) + ": expected a non-negative decimal");
    }
    values.push_back(value);
  }
  return ReplayMetric(std::move(values));
}

double ReplayMetric::endRegion(const KernelStats &) {
  if (_next >= _values.size()) throw IoError("metric replay exhausted after " + std::to_string(_next) + " readings");
  return _values[_next++];
}

std::unique_ptr<MetricProvider> makeMetricProvider(std::string_view spec) {
  if (spec == "time") return std::make_unique<WallClockMetric>();
  if (spec == "laneops") return std::make_unique<LaneOpMetric>();
  constexpr std::string_view replayPrefix = "replay:";
  if (spec.starts_with(replayPrefix)) {
    return std::make_unique<ReplayMetric>(ReplayMetric::fromFile(std::string(spec.substr(replayPrefix.size()))));
  }
  throw InvalidParameterError("unknown metric '" + std::string(spec) + "' (expected time, laneops or replay:<file>)");
}

}  // namespace lanemd
