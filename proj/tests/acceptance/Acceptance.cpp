/**
 * @file Acceptance.cpp
 * @brief End-to-end acceptance checks. Prints one PASS or FAIL line per
 * criterion and exits nonzero if any criterion fails.
 */

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "Instances.h"
#include "Oracle.h"
#include "lanemd/Errors.h"
#include "lanemd/containers/ClusterLists.h"
#include "lanemd/kernels/LJKernel.h"
#include "lanemd/sim/Simulation.h"
#include "lanemd/sim/Telemetry.h"
#include "lanemd/traversals/Schedule.h"
#include "lanemd/tuning/MetricProvider.h"

using namespace lanemd;

namespace {

struct Outcome {
  bool pass{true};
  std::string detail;
};

/// Collects the first few failure messages of a criterion.
class Failures {
 public:
  void add(const std::string &message) {
    if (_count++ < 5) _text << (_text.tellp() > 0 ? "; " : "") << message;
  }
  [[nodiscard]] Outcome outcome(const std::string &summary) const {
    if (_count == 0) return {true, summary};
    return {false, std::to_string(_count) + " failure(s): " + _text.str()};
  }

 private:
  std::size_t _count{0};
  std::ostringstream _text;
};

std::filesystem::path scratchDir() {
  static const auto dir = [] {
    std::random_device rd;
    auto d = std::filesystem::temp_directory_path() / ("lanemd_acceptance_" + std::to_string(rd()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

// ---------------------------------------------------------------------------

Outcome forcesMatchReference() {
  Failures failures;
  double worst = 0.;
  std::size_t phases = 0;
  const auto space = enumerateSearchSpace({});
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto instance = testutil::makeRandomInstance(seed, 500);
    const auto reference = oracle::allPairsForces(testutil::positionsOf(instance.particles),
                                                  testutil::toDomain(instance.box), testutil::toPotential(instance.params));
    for (std::size_t v : {4u, 8u, 16u}) {
      for (const auto &config : space) {
        std::vector<std::size_t> clusterSizes{v};
        if (config.container == ContainerKind::verletClusterLists) clusterSizes.push_back(v / 2);
        for (std::size_t m : clusterSizes) {
          const auto phase = testutil::computeForces(instance, config, v, m);
          ++phases;
          const double err = oracle::maxRelativeError(phase.forces, reference);
          worst = std::max(worst, err);
          if (not(err <= 1e-12)) {
            failures.add("seed " + std::to_string(seed) + " V=" + std::to_string(v) + " M=" + std::to_string(m) + " " +
                         config.toString() + " rel " + std::to_string(err));
          }
        }
      }
    }
  }
  std::ostringstream s;
  s << phases << " force phases on 50 random instances, worst relative error " << worst;
  return failures.outcome(s.str());
}

Outcome newton3HalvesPairs() {
  Failures failures;
  std::size_t checks = 0;
  for (std::uint64_t seed = 101; seed <= 120; ++seed) {
    const auto instance = testutil::makeRandomInstance(seed, 400);
    for (auto pattern : allPatterns) {
      const auto pairs = [&](ContainerKind c, TraversalKind t, bool n3) {
        return testutil::computeForces(instance, Configuration{c, t, n3, pattern}, 8, 8).stats.pairInteractions;
      };
      const auto check = [&](std::uint64_t off, std::uint64_t on, const std::string &what) {
        ++checks;
        if (off != 2 * on) {
          failures.add("seed " + std::to_string(seed) + " " + what + ": off " + std::to_string(off) + " on " +
                       std::to_string(on));
        }
      };
      const auto lc = ContainerKind::linkedCells;
      check(pairs(lc, TraversalKind::lc_c08, false), pairs(lc, TraversalKind::lc_c08, true), "lc_c08");
      check(pairs(lc, TraversalKind::lc_c18, false), pairs(lc, TraversalKind::lc_c18, true), "lc_c18");
      check(pairs(lc, TraversalKind::lc_c01, false), pairs(lc, TraversalKind::lc_c08, true), "lc_c01 vs lc_c08");
      const auto vcl = ContainerKind::verletClusterLists;
      check(pairs(vcl, TraversalKind::vcl, false), pairs(vcl, TraversalKind::vcl, true), "vcl");
    }
  }
  return failures.outcome(std::to_string(checks) + " on/off comparisons, all exactly 2:1");
}

ParticleBuffer lineOfParticles(std::size_t n, double offset) {
  ParticleBuffer buffer;
  for (std::size_t k = 0; k < n; ++k) {
    Particle p;
    p.id = k;
    p.position = {offset + 1.1 * static_cast<double>(k), 0., 0.};
    buffer.push_back(p);
  }
  return buffer;
}

Outcome blankLaneFormula() {
  Failures failures;
  std::size_t calls = 0;
  const LJParams params;
  for (std::size_t v : {4u, 8u}) {
    for (auto pattern : allPatterns) {
      // register shape (i-particles, j-particles), written out independently
      std::size_t a = 1, b = v;
      if (pattern == PatternKind::vByOne) a = v, b = 1;
      if (pattern == PatternKind::twoByHalf) a = 2, b = v / 2;
      if (pattern == PatternKind::halfByTwo) a = v / 2, b = 2;
      for (std::size_t ni = 0; ni <= 33; ++ni) {
        for (std::size_t nj = 0; nj <= 33; ++nj) {
          auto bi = lineOfParticles(ni, 0.);
          auto bj = lineOfParticles(nj, 0.55);
          for (auto &y : bj.posY) y = 0.7;
          for (bool newton3 : {false, true}) {
            KernelStats stats;
            computePairVectorized(bi, bj, params, newton3, false, pattern, v, stats);
            ++calls;
            const std::uint64_t expected = ((ni + a - 1) / a) * ((nj + b - 1) / b) * v - ni * nj;
            if (stats.blankLanes != expected or blanksExpected(pattern, ni, nj, v) != expected or
                stats.laneSlots != stats.usefulInteractions + stats.blankLanes) {
              failures.add(std::string(toString(pattern)) + " V=" + std::to_string(v) + " " + std::to_string(ni) + "x" +
                           std::to_string(nj) + ": measured " + std::to_string(stats.blankLanes) + " expected " +
                           std::to_string(expected));
            }
          }
        }
      }
    }
  }
  return failures.outcome(std::to_string(calls) + " kernel calls over Ni, Nj in [0, 33]");
}

Outcome alignedClustersHaveNoBlanks() {
  Failures failures;
  const LJParams params;
  std::size_t calls = 0;
  struct Case {
    PatternKind pattern;
    bool halfWidth;
  };
  for (std::size_t v : {4u, 8u, 16u, 32u}) {
    for (const auto &c : {Case{PatternKind::halfByTwo, true}, Case{PatternKind::vByOne, false},
                          Case{PatternKind::oneByV, false}}) {
      const std::size_t m = c.halfWidth ? v / 2 : v;
      ParticleBuffer column;
      for (std::size_t k = 0; k < 2 * m; ++k) {
        Particle p;
        p.id = k;
        p.position = {0., 0., 1.05 * static_cast<double>(k)};
        column.push_back(p);
      }
      auto clusters = buildClusters(column, m);
      if (clusters.size() != 2 or clusters[0].numDummies() != 0 or clusters[1].numDummies() != 0) {
        failures.add("clustering of 2M particles did not give two full clusters");
        continue;
      }
      for (bool newton3 : {false, true}) {
        KernelStats stats;
        computePairVectorized(clusters[0].particles, clusters[1].particles, params, newton3, false, c.pattern, v, stats);
        ++calls;
        if (blanksExpected(c.pattern, m, m, v) != 0 or stats.blankLanes != 0) {
          failures.add(std::string(toString(c.pattern)) + " V=" + std::to_string(v) + " M=" + std::to_string(m) +
                       ": " + std::to_string(stats.blankLanes) + " blank lanes");
        }
      }
    }
  }
  return failures.outcome(std::to_string(calls) + " cluster pair calls without blank lanes");
}

// Cell universe oracle: owned cells plus the halo ring on periodic axes.
using CellPair = std::pair<std::size_t, std::size_t>;

std::multiset<CellPair> expectedCellPairs(const CellIndex3D &n, const std::array<bool, 3> &halo, bool unordered) {
  std::vector<CellIndex3D> cells;
  std::array<int, 3> lo{}, hi{};
  for (int d = 0; d < 3; ++d) {
    lo[d] = halo[d] ? -1 : 0;
    hi[d] = halo[d] ? n[d] : n[d] - 1;
  }
  for (int z = lo[2]; z <= hi[2]; ++z) {
    for (int y = lo[1]; y <= hi[1]; ++y) {
      for (int x = lo[0]; x <= hi[0]; ++x) cells.push_back({x, y, z});
    }
  }
  const auto owned = [&](const CellIndex3D &c) {
    return c[0] >= 0 and c[0] < n[0] and c[1] >= 0 and c[1] < n[1] and c[2] >= 0 and c[2] < n[2];
  };
  const auto index = [&](const CellIndex3D &c) {
    const auto sx = static_cast<std::size_t>(n[0] + 2), sy = static_cast<std::size_t>(n[1] + 2);
    return static_cast<std::size_t>(c[0] + 1) + sx * (static_cast<std::size_t>(c[1] + 1) + sy * static_cast<std::size_t>(c[2] + 1));
  };
  std::multiset<CellPair> out;
  for (const auto &a : cells) {
    for (const auto &b : cells) {
      if (std::abs(a[0] - b[0]) > 1 or std::abs(a[1] - b[1]) > 1 or std::abs(a[2] - b[2]) > 1) continue;
      if (a == b ? not owned(a) : not(owned(a) or owned(b))) continue;
      const auto ia = index(a), ib = index(b);
      if (unordered and ia > ib) continue;
      out.insert({ia, ib});
    }
  }
  return out;
}

Outcome traversalCoverage() {
  Failures failures;
  std::size_t schedules = 0;
  struct Variant {
    TraversalKind kind;
    bool newton3;
  };
  const std::vector<Variant> variants{{TraversalKind::lc_c01, false}, {TraversalKind::lc_c08, false},
                                      {TraversalKind::lc_c08, true},  {TraversalKind::lc_c18, false},
                                      {TraversalKind::lc_c18, true}};
  for (int x = 1; x <= 5; ++x) {
    for (int y = 1; y <= 5; ++y) {
      for (int z = 1; z <= 5; ++z) {
        for (int mask = 0; mask < 8; ++mask) {
          const std::array<bool, 3> halo{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
          const CellIndex3D n{x, y, z};
          const auto ordered = expectedCellPairs(n, halo, false);
          const auto unordered = expectedCellPairs(n, halo, true);
          for (const auto &v : variants) {
            const auto schedule = scheduleLinkedCells(n, halo, v.kind, v.newton3);
            ++schedules;
            std::multiset<CellPair> got;
            std::map<std::pair<int, std::size_t>, std::set<std::size_t>> writers;
            for (const auto &u : schedule.units) {
              got.insert(v.newton3 ? CellPair{std::min(u.i, u.j), std::max(u.i, u.j)} : CellPair{u.i, u.j});
              writers[{u.color, u.i}].insert(u.baseStep);
              if (v.newton3) writers[{u.color, u.j}].insert(u.baseStep);
            }
            bool disjoint = true;
            for (const auto &[key, steps] : writers) disjoint = disjoint and steps.size() == 1;
            const std::string where = std::string(toString(v.kind)) + (v.newton3 ? " n3" : "") + " grid " +
                                      std::to_string(x) + "x" + std::to_string(y) + "x" + std::to_string(z) +
                                      " halo " + std::to_string(mask);
            if (got != (v.newton3 ? unordered : ordered)) failures.add(where + ": pair set differs");
            if (not disjoint or not verifyColoring(schedule)) failures.add(where + ": coloring conflict");
          }
        }
      }
    }
  }
  return failures.outcome(std::to_string(schedules) + " schedules on grids up to 5x5x5, all pairs exactly once");
}

ScenarioSpec tunerSpec() {
  ScenarioSpec spec;
  spec.box.max = {12., 12., 12.};
  spec.params.cutoff = 2.5;
  spec.iterations = 260;
  CubeSource source;
  source.origin = {3., 3., 3.};
  source.counts = {5, 5, 5};
  source.spacing = 1.1;
  source.velocityJitter = 0.3;
  spec.sources.push_back(source);
  spec.searchSpace.containers = {ContainerKind::linkedCells};
  spec.searchSpace.traversals = {TraversalKind::lc_c01, TraversalKind::lc_c08};
  spec.tuning.samplesPerConfig = 3;
  spec.tuning.tuningInterval = 100;
  spec.tuning.retakeOnRebuild = false;
  return spec;
}

Outcome tunerSelectsCheapest() {
  Failures failures;
  const auto spec = tunerSpec();
  const auto space = enumerateSearchSpace(spec.searchSpace);
  if (space.size() != 12) failures.add("search space has " + std::to_string(space.size()) + " configurations");

  LaneOpMetric laneops;
  Simulation first(spec, laneops);
  first.run();
  std::map<std::size_t, std::map<Configuration, std::size_t>> perPhase;
  for (const auto &r : first.records()) {
    if (r.phase == TuningState::tuning) ++perPhase[r.iteration / spec.tuning.tuningInterval][r.configuration];
  }
  if (perPhase.size() != 3) failures.add(std::to_string(perPhase.size()) + " tuning phases instead of 3");
  for (const auto &[phase, counts] : perPhase) {
    if (counts.size() != space.size()) failures.add("phase " + std::to_string(phase) + " sampled " + std::to_string(counts.size()) + " configurations");
    for (const auto &[config, n] : counts) {
      if (n != spec.tuning.samplesPerConfig) {
        failures.add("phase " + std::to_string(phase) + " " + config.toString() + " has " + std::to_string(n) + " samples");
      }
    }
  }

  // Readings where one configuration is clearly cheapest, then positive rescalings of them.
  const Configuration target = space[7];
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> noise(0., 0.2);
  std::vector<double> readings;
  for (const auto &r : first.records()) readings.push_back((r.configuration == target ? 1. : 1.5) + noise(rng));
  for (double scale : {1., 1e-6, 3.7, 1e9}) {
    std::vector<double> scaled;
    for (double x : readings) scaled.push_back(scale * x);
    ReplayMetric replay(scaled);
    Simulation run(spec, replay);
    run.run();
    for (const auto &selected : run.summary().selectedPerPhase) {
      if (selected != target) failures.add("scale " + std::to_string(scale) + " selected " + selected.toString());
    }
    if (run.summary().selectedPerPhase.size() != 3) failures.add("scale " + std::to_string(scale) + ": phases missing");
  }

  // The laneops selection itself is invariant under rescaling.
  std::vector<double> laneValues;
  for (const auto &r : first.records()) laneValues.push_back(r.metricValue);
  for (double scale : {0.25, 1e6}) {
    std::vector<double> scaled;
    for (double x : laneValues) scaled.push_back(scale * x);
    ReplayMetric replay(scaled);
    Simulation run(spec, replay);
    run.run();
    if (run.summary().selectedPerPhase != first.summary().selectedPerPhase) {
      failures.add("laneops selection changed under scale " + std::to_string(scale));
    }
  }
  return failures.outcome("12 configurations x 3 samples in each of 3 phases; injected optimum " + target.toString() +
                          " selected every phase under 4 scalings");
}

Outcome conservation() {
  Failures failures;
  std::ostringstream summary;

  // Two-body energy drift.
  {
    ScenarioSpec spec;
    spec.box.max = {10., 10., 10.};
    spec.params.dt = 1e-4;
    spec.iterations = 1000;
    spec.fixedConfig = Configuration{ContainerKind::linkedCells, TraversalKind::lc_c08, true, PatternKind::oneByV};
    CubeSource source;
    source.origin = {4.25, 5., 5.};
    source.counts = {2, 1, 1};
    source.spacing = 1.5;
    source.velocity = {0., 0.3, 0.};
    spec.sources.push_back(source);
    const oracle::Domain domain = testutil::toDomain(spec.box);
    const oracle::Potential potential = testutil::toPotential(spec.params);
    const auto energy = [&](const ParticleBuffer &p) {
      return kineticEnergy(p, spec.params.mass) + oracle::potentialEnergy(testutil::positionsOf(p), domain, potential);
    };
    const auto initial = soaFromParticles(spec.generateParticles());
    const double e0 = energy(initial);
    double drift = 0.;
    LaneOpMetric metric;
    Simulation sim(spec, metric);
    sim.setObserver([&](const IterationRecord &, const ParticleBuffer &p) {
      drift = std::max(drift, std::abs(energy(p) - e0) / std::abs(e0));
    });
    sim.run();
    if (not(drift < 1e-3)) failures.add("two-body energy drift " + std::to_string(drift));
    summary << "two-body drift " << drift;
  }

  // Newton's third law in a periodic box.
  for (auto [container, traversal] : {std::pair{ContainerKind::linkedCells, TraversalKind::lc_c08},
                                      std::pair{ContainerKind::linkedCells, TraversalKind::lc_c18},
                                      std::pair{ContainerKind::verletClusterLists, TraversalKind::vcl}}) {
    ScenarioSpec spec;
    spec.box.max = {6., 6., 4.8};
    spec.box.boundary = {BoundaryType::periodic, BoundaryType::periodic, BoundaryType::periodic};
    spec.iterations = 300;
    spec.fixedConfig = Configuration{container, traversal, true, PatternKind::twoByHalf};
    CubeSource source;
    source.origin = {0.6, 0.6, 0.6};
    source.counts = {5, 5, 4};
    source.spacing = 1.2;
    source.velocityJitter = 0.8;
    spec.sources.push_back(source);
    const Vec3 p0 = totalMomentum(soaFromParticles(spec.generateParticles()), spec.params.mass);
    double maxForceSum = 0., maxMomentumDrift = 0.;
    LaneOpMetric metric;
    Simulation sim(spec, metric);
    sim.setObserver([&](const IterationRecord &, const ParticleBuffer &p) {
      Vec3 f{0., 0., 0.};
      for (std::size_t k = 0; k < p.size(); ++k) f = vec::add(f, p.force(k));
      maxForceSum = std::max(maxForceSum, vec::norm(f));
      maxMomentumDrift = std::max(maxMomentumDrift, vec::norm(vec::sub(totalMomentum(p, spec.params.mass), p0)));
    });
    sim.run();
    const std::string name(toString(traversal));
    if (sim.particles().size() != 100) failures.add(name + ": particle count " + std::to_string(sim.particles().size()));
    if (not(maxForceSum < 1e-9)) failures.add(name + ": |sum F| reached " + std::to_string(maxForceSum));
    if (not(maxMomentumDrift < 1e-8)) failures.add(name + ": momentum drift " + std::to_string(maxMomentumDrift));
    summary << "; " << name << " max|sum F| " << maxForceSum << " momentum drift " << maxMomentumDrift;
  }
  return failures.outcome(summary.str());
}

Outcome explodingCube() {
  Failures failures;
  auto spec = parseScenario(std::filesystem::path(LANEMD_SCENARIO_DIR) / "exploding_cube_short.scn");
  LaneOpMetric metric;
  Simulation sim(spec, metric);
  sim.run();
  const auto &summary = sim.summary();
  if (summary.particleCount != 5920) failures.add(std::to_string(summary.particleCount) + " particles");
  if (sim.records().size() != 1000) failures.add(std::to_string(sim.records().size()) + " records");
  if (not(summary.initialMaxParticlesPerCell > summary.finalMaxParticlesPerCell)) {
    failures.add("max particles per cell " + std::to_string(summary.initialMaxParticlesPerCell) + " -> " +
                 std::to_string(summary.finalMaxParticlesPerCell));
  }
  const auto csv = scratchDir() / "cube.csv";
  writeCsv(sim.records(), csv);
  if (readCsv(csv) != sim.records()) failures.add("CSV round trip differs");
  return failures.outcome(std::to_string(summary.particleCount) + " particles, max per cell " +
                          std::to_string(summary.initialMaxParticlesPerCell) + " -> " +
                          std::to_string(summary.finalMaxParticlesPerCell) + ", CSV round trip exact");
}

std::string readBytes(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  Failures failures;
  const auto scenario = std::filesystem::path(LANEMD_SCENARIO_DIR) / "exploding_cube_short.scn";
  std::vector<std::string> outputs;
#ifdef LANEMD_CLI
  const std::string how = "CLI";
  for (int run = 0; run < 2; ++run) {
    const auto csv = scratchDir() / ("determinism" + std::to_string(run) + ".csv");
    const std::string command = std::string("\"") + LANEMD_CLI + "\" run \"" + scenario.string() +
                                "\" --metric laneops --iterations 300 --csv \"" + csv.string() + "\" > \"" +
                                (scratchDir() / "cli.log").string() + "\"";
    const int status = std::system(command.c_str());
    if (status != 0) failures.add("CLI exited with status " + std::to_string(status));
    outputs.push_back(readBytes(csv));
  }
#else
  const std::string how = "library";
  for (int run = 0; run < 2; ++run) {
    auto spec = parseScenario(scenario);
    spec.iterations = 300;
    LaneOpMetric metric;
    Simulation sim(spec, metric);
    sim.run();
    outputs.push_back(formatCsv(sim.records()));
  }
#endif
  if (outputs[0].empty()) failures.add("empty CSV");
  if (outputs[0] != outputs[1]) failures.add("CSV bytes differ between runs");
  return failures.outcome(how + " runs produced identical CSV (" + std::to_string(outputs[0].size()) + " bytes)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"forces match the all-pairs reference", forcesMatchReference},
      {"newton3 halves pair interactions", newton3HalvesPairs},
      {"blank lane formula", blankLaneFormula},
      {"aligned cluster sizes waste no lanes", alignedClustersHaveNoBlanks},
      {"traversal coverage and coloring", traversalCoverage},
      {"tuner sampling and selection", tunerSelectsCheapest},
      {"energy and momentum conservation", conservation},
      {"exploding cube", explodingCube},
      {"deterministic laneops runs", determinism},
  };
  int failed = 0;
  for (std::size_t n = 0; n < criteria.size(); ++n) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[n].second();
    } catch (const std::exception &e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += outcome.pass ? 0 : 1;
    std::printf("%s %zu: %s (%.1f s) %s\n", outcome.pass ? "PASS" : "FAIL", n + 1, criteria[n].first.c_str(), seconds,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::error_code ec;
  std::filesystem::remove_all(scratchDir(), ec);
  return failed == 0 ? 0 : 1;
}
