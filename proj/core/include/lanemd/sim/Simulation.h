/**
 * @file Simulation.h
 * @brief The iteration loop wiring integration, containers, tuning and kernels.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lanemd/kernels/KernelStats.h"
#include "lanemd/particles/ParticleBuffer.h"
#include "lanemd/sim/Scenario.h"
#include "lanemd/tuning/AutoTuner.h"
#include "lanemd/tuning/MetricProvider.h"

namespace lanemd {

enum class TuningState { tuning, production };

std::string_view toString(TuningState phase);
TuningState tuningStateFromString(std::string_view name);

struct IterationRecord {
  std::size_t iteration{0};
  TuningState phase{TuningState::production};
  Configuration configuration;
  double metricValue{0.};
  std::uint64_t laneSlots{0};
  std::uint64_t usefulInteractions{0};
  std::uint64_t blankLanes{0};
  std::uint64_t pairInteractions{0};
  std::size_t particleCount{0};

  bool operator==(const IterationRecord &) const = default;
};

struct RunSummary {
  std::string metric;
  /// Force-phase metric summed per configuration (key: Configuration::toString).
  std::map<std::string, double> metricPerConfiguration;
  double metricTotal{0.};
  std::vector<Configuration> selectedPerPhase;
  std::size_t iterations{0};
  std::size_t tuningIterations{0};
  std::size_t retakes{0};
  std::size_t rebuilds{0};
  double wallTimeSeconds{0.};
  std::size_t particleCount{0};
  double kineticEnergy{0.};
  Vec3 totalMomentum{0., 0., 0.};
  /// Largest owned-cell occupancy of a cutoff + skin grid before the first and after the last iteration.
  std::size_t initialMaxParticlesPerCell{0};
  std::size_t finalMaxParticlesPerCell{0};
  bool diverged{false};
};

/**
 * One run of a scenario. Records are kept in the object so a caller can
 * still flush them after run() threw.
 */
class Simulation {
 public:
  Simulation(ScenarioSpec spec, MetricProvider &metric);

  /// Executes all iterations. Throws DivergedSimulationError on blow-up.
  void run();

  [[nodiscard]] const std::vector<IterationRecord> &records() const { return _records; }
  [[nodiscard]] const RunSummary &summary() const { return _summary; }
  [[nodiscard]] const ParticleBuffer &particles() const { return _owned; }
  [[nodiscard]] const ScenarioSpec &spec() const { return _spec; }

  /// Called once per iteration after the record is appended. Particles hold this iteration's forces.
  using Observer = std::function<void(const IterationRecord &, const ParticleBuffer &)>;
  void setObserver(Observer observer) { _observer = std::move(observer); }

 private:
  void finishSummary(double seconds);

  ScenarioSpec _spec;
  MetricProvider &_metric;
  ParticleBuffer _owned;
  std::vector<IterationRecord> _records;
  RunSummary _summary;
  std::optional<AutoTuner> _tuner;
  Observer _observer;
};

/// Largest owned-cell occupancy of a Linked Cells grid with side >= cutoff + skin.
std::size_t maxParticlesPerCell(const ParticleBuffer &owned, const SimulationBox &box, const LJParams &params);

double kineticEnergy(const ParticleBuffer &particles, double mass);
Vec3 totalMomentum(const ParticleBuffer &particles, double mass);

}  // namespace lanemd
