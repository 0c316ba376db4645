/**
 * @file AutoTuner.h
 * @brief Full-search tuning over a fixed configuration search space.
 */

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lanemd/tuning/Configuration.h"
#include "lanemd/tuning/Reduction.h"

namespace lanemd {

struct TuningPolicy {
  /// Samples collected per configuration and tuning phase.
  std::size_t samplesPerConfig{3};
  /// Iterations from the start of one tuning phase to the start of the next.
  std::size_t tuningInterval{1000};
  Reduction reduction{Reduction::mean};
  /// Discard samples taken in an iteration that rebuilt neighbor structures.
  bool retakeOnRebuild{true};
  /// Upper bound on consecutive retakes of one sample.
  std::size_t maxRetakes{3};
};

struct Evidence {
  Configuration configuration;
  std::vector<double> samples;
  double reducedValue{0.};
  /// The configuration failed during the phase; its value is +infinity.
  bool failed{false};
};

/**
 * Configuration with the smallest reduced value; ties go to the earlier entry.
 * Failed evidence is skipped. Throws InvalidParameterError for missing or
 * incomplete evidence, or if every configuration failed.
 */
Configuration selectOptimum(std::span<const Evidence> evidence);

/// referenceValue / patternValue. Throws InvalidParameterError for patternValue <= 0.
double computeSpeedup(double referenceValue, double patternValue);

/**
 * State machine advanced once per iteration:
 *
 *   auto config = tuner.next(iteration);
 *   ... run the force phase under config, measure ...
 *   tuner.addSample(value, rebuiltThisIteration);
 *
 * A tuning phase walks the search space in order, samplesPerConfig accepted
 * samples per configuration, then the optimum runs until tuningInterval
 * iterations after the phase start, where the next phase begins.
 */
class AutoTuner {
 public:
  AutoTuner(std::vector<Configuration> searchSpace, TuningPolicy policy);

  const Configuration &next(std::size_t iteration);
  void addSample(double value, bool rebuiltThisIteration = false);
  /// The current configuration failed; it is recorded as +infinity and skipped.
  void reportFailure();

  [[nodiscard]] bool inTuningPhase() const { return _tuning; }
  [[nodiscard]] std::size_t phase() const { return _phase; }
  [[nodiscard]] std::size_t retakes() const { return _totalRetakes; }
  [[nodiscard]] const std::vector<Configuration> &searchSpace() const { return _space; }
  [[nodiscard]] const TuningPolicy &policy() const { return _policy; }
  /// Evidence of the current (or last completed) phase, in search space order.
  [[nodiscard]] const std::vector<Evidence> &evidence() const { return _evidence; }
  /// Optimum chosen by each completed phase.
  [[nodiscard]] const std::vector<Configuration> &selectedPerPhase() const { return _selected; }

 private:
  void startPhase(std::size_t iteration);
  void advanceConfiguration();

  std::vector<Configuration> _space;
  TuningPolicy _policy;
  std::vector<Evidence> _evidence;
  std::vector<Configuration> _selected;
  Configuration _optimum{};
  std::size_t _phase{0};
  std::size_t _phaseStart{0};
  std::size_t _current{0};
  std::size_t _retakesOfCurrent{0};
  std::size_t _totalRetakes{0};
  bool _tuning{false};
  bool _started{false};
};

}  // namespace lanemd
