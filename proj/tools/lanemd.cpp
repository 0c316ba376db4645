/**
 * @file lanemd.cpp
 * @brief Command line front end: `lanemd run <scenario> [options]`.
 */

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lanemd/Errors.h"
#include "lanemd/sim/Scenario.h"
#include "lanemd/sim/Simulation.h"
#include "lanemd/sim/Telemetry.h"
#include "lanemd/tuning/MetricProvider.h"

namespace {

struct RunOptions {
  std::string scenario;
  std::optional<std::size_t> vectorWidth;
  std::optional<std::string> metric;
  std::optional<std::string> csv;
  std::optional<std::string> summary;
  std::optional<std::size_t> iterations;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> fixedConfig;
};

/// Writes whatever the run produced. Used on success and after divergence.
void flushOutputs(const lanemd::Simulation &sim, const lanemd::ScenarioSpec &spec) {
  if (not spec.csvPath.empty()) lanemd::writeCsv(sim.records(), spec.csvPath);
  if (not spec.summaryPath.empty()) lanemd::writeSummary(sim.summary(), spec.summaryPath);
}

int run(const RunOptions &opts) {
  auto spec = lanemd::parseScenario(opts.scenario);
  if (opts.vectorWidth) spec.vectorWidth = *opts.vectorWidth;
  if (opts.metric) spec.metric = *opts.metric;
  if (opts.csv) spec.csvPath = *opts.csv;
  if (opts.summary) spec.summaryPath = *opts.summary;
  if (opts.iterations) spec.iterations = *opts.iterations;
  if (opts.seed) spec.seed = *opts.seed;
  if (opts.fixedConfig) spec.fixedConfig = lanemd::configurationFromString(*opts.fixedConfig);

  auto metric = lanemd::makeMetricProvider(spec.metric);
  lanemd::Simulation sim(spec, *metric);
  try {
    sim.run();
  } catch (const lanemd::Error &e) {
    if (e.kind() == lanemd::ErrorKind::diverged) {
      std::cerr << "lanemd: diverged after " << sim.records().size() << " iterations: " << e.what() << "\n";
      flushOutputs(sim, sim.spec());
      return lanemd::exitCodeFor(e.kind());
    }
    throw;
  }
  flushOutputs(sim, sim.spec());

  const auto &s = sim.summary();
  std::cout << "iterations " << s.iterations << ", particles " << s.particleCount << ", rebuilds " << s.rebuilds
            << ", wall time " << s.wallTimeSeconds << " s\n";
  for (std::size_t p = 0; p < s.selectedPerPhase.size(); ++p) {
    std::cout << "phase " << p << " selected " << s.selectedPerPhase[p].toString() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"lanemd: short-range molecular dynamics with SIMD pattern auto-tuning"};
  app.require_subcommand(1);

  RunOptions opts;
  auto *runCmd = app.add_subcommand("run", "Run a scenario file");
  runCmd->add_option("scenario", opts.scenario, "Scenario file")->required();
  runCmd->add_option("--vector-width", opts.vectorWidth, "SIMD width V (4, 8, 16 or 32)");
  runCmd->add_option("--metric", opts.metric, "time, laneops or replay:<file>");
  runCmd->add_option("--csv", opts.csv, "Per-iteration CSV output");
  runCmd->add_option("--summary", opts.summary, "JSON run summary output");
  runCmd->add_option("--iterations", opts.iterations, "Override the iteration count");
  runCmd->add_option("--seed", opts.seed, "Override the random seed");
  runCmd->add_option("--fixed-config", opts.fixedConfig, "container,traversal,newton3,pattern; disables tuning");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lanemd::exitCodeFor(lanemd::ErrorKind::invalidInput);
  }

  try {
    return run(opts);
  } catch (const lanemd::Error &e) {
    std::cerr << "lanemd: " << e.what() << "\n";
    return lanemd::exitCodeFor(e.kind());
  } catch (const std::exception &e) {
    std::cerr << "lanemd: " << e.what() << "\n";
    return lanemd::exitCodeFor(lanemd::ErrorKind::invalidInput);
  }
}
