#include "lanemd/sim/Simulation.h"

#include <chrono>
#include <string>

#include "lanemd/Errors.h"
#include "lanemd/containers/LinkedCells.h"
#include "lanemd/particles/Boundaries.h"
#include "lanemd/particles/Integrator.h"
#include "lanemd/sim/ForcePipeline.h"

namespace lanemd {

std::string_view toString(TuningState phase) { return phase == TuningState::tuning ? "tuning" : "production"; }

TuningState tuningStateFromString(std::string_view name) {
  if (name == "tuning") return TuningState::tuning;
  if (name == "production") return TuningState::production;
  throw ParseError("unknown phase '" + std::string(name) + "'");
}

std::size_t maxParticlesPerCell(const ParticleBuffer &owned, const SimulationBox &box, const LJParams &params) {
  ParticleBuffer ownedOnly = owned;
  return buildLinkedCells(ownedOnly, box, params.cutoff, params.skin).maxParticlesPerCell();
}

double kineticEnergy(const ParticleBuffer &p, double mass) {
  double sum = 0.;
  for (std::size_t k = 0; k < p.size(); ++k) {
    sum += p.velX[k] * p.velX[k] + p.velY[k] * p.velY[k] + p.velZ[k] * p.velZ[k];
  }
  return 0.5 * mass * sum;
}

Vec3 totalMomentum(const ParticleBuffer &p, double mass) {
  Vec3 sum{0., 0., 0.};
  for (std::size_t k = 0; k < p.size(); ++k) {
    sum[0] += p.velX[k];
    sum[1] += p.velY[k];
    sum[2] += p.velZ[k];
  }
  return vec::scale(sum, mass);
}

Simulation::Simulation(ScenarioSpec spec, MetricProvider &metric) : _spec(std::move(spec)), _metric(metric) {
  _spec.validate();
  _owned = soaFromParticles(_spec.generateParticles());
  if (not _spec.fixedConfig) {
    _tuner.emplace(enumerateSearchSpace(_spec.searchSpace), _spec.tuning);
  }
}

void Simulation::run() {
  const auto start = std::chrono::steady_clock::now();
  _records.clear();
  _records.reserve(_spec.iterations);
  _summary = {};
  _summary.metric = std::string(_metric.name());
  _summary.initialMaxParticlesPerCell = maxParticlesPerCell(_owned, _spec.box, _spec.params);

  PipelineOptions options;
  options.vectorWidth = _spec.vectorWidth;
  options.clusterSize = _spec.effectiveClusterSize();
  options.rebuildPeriod = _spec.rebuildPeriod;
  ForcePipeline pipeline(_spec.box, _spec.params, options);

  try {
    // forces of the initial state feed the first position update; not measured
    const auto initial = _spec.fixedConfig ? *_spec.fixedConfig : _tuner->searchSpace().front();
    _owned.zeroForces();
    pipeline.prepare(_owned, initial);
    pipeline.computeForces(_owned, initial);

    for (std::size_t it = 0; it < _spec.iterations; ++it) {
      velocityVerletStep(_owned, _spec.params, VerletPhase::preForce);

      const Configuration config = _tuner ? _tuner->next(it) : *_spec.fixedConfig;
      const bool tuning = _tuner and _tuner->inTuningPhase();
      const bool rebuilt = pipeline.prepare(_owned, config);

      _metric.beginRegion();
      const auto stats = pipeline.computeForces(_owned, config);
      const double value = _metric.endRegion(stats);
      if (_tuner) _tuner->addSample(value, rebuilt);

      velocityVerletStep(_owned, _spec.params, VerletPhase::postForce);
      applyBoundaries(_owned, _spec.box);
      pipeline.endIteration();

      IterationRecord record;
      record.iteration = it;
      record.phase = tuning ? TuningState::tuning : TuningState::production;
      record.configuration = config;
      record.metricValue = value;
      record.laneSlots = stats.laneSlots;
      record.usefulInteractions = stats.usefulInteractions;
      record.blankLanes = stats.blankLanes;
      record.pairInteractions = stats.pairInteractions;
      record.particleCount = _owned.size();
      _records.push_back(record);
      if (_observer) _observer(record, _owned);
    }
  } catch (const Error &e) {
    _summary.diverged = e.kind() == ErrorKind::diverged;
    _summary.rebuilds = pipeline.rebuilds();
    finishSummary(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    throw;
  }

  _summary.rebuilds = pipeline.rebuilds();
  _summary.finalMaxParticlesPerCell = maxParticlesPerCell(_owned, _spec.box, _spec.params);
  finishSummary(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
}

void Simulation::finishSummary(double seconds) {
  _summary.wallTimeSeconds = seconds;
  _summary.iterations = _records.size();
  _summary.particleCount = _owned.size();
  _summary.kineticEnergy = kineticEnergy(_owned, _spec.params.mass);
  _summary.totalMomentum = totalMomentum(_owned, _spec.params.mass);
  for (const auto &r : _records) {
    _summary.metricPerConfiguration[r.configuration.toString()] += r.metricValue;
    _summary.metricTotal += r.metricValue;
    if (r.phase == TuningState::tuning) ++_summary.tuningIterations;
  }
  if (_tuner) {
    _summary.selectedPerPhase = _tuner->selectedPerPhase();
    _summary.retakes = _tuner->retakes();
  }
}

}  // namespace lanemd
