#include "lanemd/tuning/AutoTuner.h"

#include <cmath>
#include <limits>
#include <string>

#include "lanemd/Errors.h"

namespace lanemd {

Configuration selectOptimum(std::span<const Evidence> evidence) {
  if (evidence.empty()) throw InvalidParameterError("no evidence to select from");
  const Evidence *best = nullptr;
  for (const auto &e : evidence) {
    if (e.failed) continue;
    if (e.samples.empty()) {
      throw InvalidParameterError("missing evidence for configuration " + e.configuration.toString());
    }
    if (best == nullptr or e.reducedValue < best->reducedValue) best = &e;
  }
  if (best == nullptr) throw InvalidParameterError("every configuration failed during tuning");
  return best->configuration;
}

double computeSpeedup(double referenceValue, double patternValue) {
  if (not(patternValue > 0.)) throw InvalidParameterError("speedup needs a positive pattern metric");
  return referenceValue / patternValue;
}

AutoTuner::AutoTuner(std::vector<Configuration> searchSpace, TuningPolicy policy)
    : _space(std::move(searchSpace)), _policy(policy) {
  if (_space.empty()) throw InvalidConfigurationError("empty search space");
  if (_policy.samplesPerConfig < 1) throw InvalidParameterError("samples per configuration must be at least 1");
  if (_policy.tuningInterval < _policy.samplesPerConfig * _space.size()) {
    throw InvalidParameterError("tuning interval " + std::to_string(_policy.tuningInterval) +
                                " is shorter than one tuning phase (" +
                                std::to_string(_policy.samplesPerConfig * _space.size()) + " iterations)");
  }
  _optimum = _space.front();
}

void AutoTuner::startPhase(std::size_t iteration) {
  if (_started) ++_phase;
  _started = true;
  _phaseStart = iteration;
  _tuning = true;
  _current = 0;
  _retakesOfCurrent = 0;
  _evidence.clear();
  for (const auto &config : _space) _evidence.push_back({config, {}, 0., false});
}

const Configuration &AutoTuner::next(std::size_t iteration) {
  if (not _started or (not _tuning and iteration >= _phaseStart + _policy.tuningInterval)) startPhase(iteration);
  return _tuning ? _space[_current] : _optimum;
}

void AutoTuner::advanceConfiguration() {
  _retakesOfCurrent = 0;
  ++_current;
  if (_current < _space.size()) return;

  for (auto &e : _evidence) {
    e.reducedValue = e.failed ? std::numeric_limits<double>::infinity() : reduceSamples(e.samples, _policy.reduction);
  }
  _optimum = selectOptimum(_evidence);
  _selected.push_back(_optimum);
  _tuning = false;
}

void AutoTuner::addSample(double value, bool rebuiltThisIteration) {
  if (not _tuning) return;
  if (rebuiltThisIteration and _policy.retakeOnRebuild and _retakesOfCurrent < _policy.maxRetakes) {
    ++_retakesOfCurrent;
    ++_totalRetakes;
    return;
  }
  _retakesOfCurrent = 0;
  auto &e = _evidence[_current];
  e.samples.push_back(value);
  if (e.samples.size() >= _policy.samplesPerConfig) advanceConfiguration();
}

void AutoTuner::reportFailure() {
  if (not _tuning) return;
  _evidence[_current].failed = true;
  advanceConfiguration();
}

}  // namespace lanemd
