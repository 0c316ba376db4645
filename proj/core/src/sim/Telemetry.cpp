#include "lanemd/sim/Telemetry.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "lanemd/Errors.h"

namespace lanemd {

namespace {

/// Shortest representation that parses back to the same double.
std::string formatDouble(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

template <class T>
T parseNumber(const std::string &field, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() or ptr != field.data() + field.size()) {
    throw ParseError("csv line " + std::to_string(line) + ": invalid number '" + field + "'");
  }
  return v;
}

std::string header() {
  std::string h;
  for (std::size_t c = 0; c < csvColumns.size(); ++c) {
    if (c > 0) h += ',';
    h += csvColumns[c];
  }
  return h;
}

}  // namespace

std::string formatCsv(std::span<const IterationRecord> records) {
  std::string out = header();
  out += '\n';
  for (const auto &r : records) {
    out += std::to_string(r.iteration);
    out += ',';
    out += toString(r.phase);
    out += ',';
    out += toString(r.configuration.container);
    out += ',';
    out += toString(r.configuration.traversal);
    out += ',';
    out += newton3ToString(r.configuration.newton3);
    out += ',';
    out += toString(r.configuration.pattern);
    out += ',';
    out += formatDouble(r.metricValue);
    out += ',';
    out += std::to_string(r.laneSlots);
    out += ',';
    out += std::to_string(r.usefulInteractions);
    out += ',';
    out += std::to_string(r.blankLanes);
    out += ',';
    out += std::to_string(r.pairInteractions);
    out += ',';
    out += std::to_string(r.particleCount);
    out += '\n';
  }
  return out;
}

std::vector<IterationRecord> parseCsv(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  if (not std::getline(in, line) or line != header()) throw ParseError("csv header does not match");

  std::vector<IterationRecord> records;
  std::size_t lineNumber = 1;
  while (std::getline(in, line)) {
    ++lineNumber;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) f.push_back(field);
    if (f.size() != csvColumns.size()) {
      throw ParseError("csv line " + std::to_string(lineNumber) + ": expected " + std::to_string(csvColumns.size()) +
                       " fields");
    }
    IterationRecord r;
    r.iteration = parseNumber<std::size_t>(f[0], lineNumber);
    r.phase = tuningStateFromString(f[1]);
    r.configuration.container = containerKindFromString(f[2]);
    r.configuration.traversal = traversalKindFromString(f[3]);
    r.configuration.newton3 = newton3FromString(f[4]);
    r.configuration.pattern = patternKindFromString(f[5]);
    r.metricValue = parseNumber<double>(f[6], lineNumber);
    r.laneSlots = parseNumber<std::uint64_t>(f[7], lineNumber);
    r.usefulInteractions = parseNumber<std::uint64_t>(f[8], lineNumber);
    r.blankLanes = parseNumber<std::uint64_t>(f[9], lineNumber);
    r.pairInteractions = parseNumber<std::uint64_t>(f[10], lineNumber);
    r.particleCount = parseNumber<std::size_t>(f[11], lineNumber);
    records.push_back(r);
  }
  return records;
}

void writeCsv(std::span<const IterationRecord> records, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (not out) throw IoError("cannot write " + path.string());
  out << formatCsv(records);
  if (not out) throw IoError("failed writing " + path.string());
}

std::vector<IterationRecord> readCsv(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (not in) throw IoError("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseCsv(buffer.str());
}

std::string formatSummary(const RunSummary &s) {
  nlohmann::ordered_json j;
  j["metric"] = s.metric;
  j["iterations"] = s.iterations;
  j["tuning_iterations"] = s.tuningIterations;
  j["retakes"] = s.retakes;
  j["rebuilds"] = s.rebuilds;
  j["diverged"] = s.diverged;
  j["wall_time_seconds"] = s.wallTimeSeconds;
  j["metric_total"] = s.metricTotal;
  j["metric_per_configuration"] = nlohmann::ordered_json::object();
  for (const auto &[config, value] : s.metricPerConfiguration) j["metric_per_configuration"][config] = value;
  j["selected_per_phase"] = nlohmann::ordered_json::array();
  for (const auto &config : s.selectedPerPhase) j["selected_per_phase"].push_back(config.toString());
  j["particles"] = {
      {"count", s.particleCount},
      {"kinetic_energy", s.kineticEnergy},
      {"total_momentum", s.totalMomentum},
      {"initial_max_particles_per_cell", s.initialMaxParticlesPerCell},
      {"final_max_particles_per_cell", s.finalMaxParticlesPerCell},
  };
  return j.dump(2) + "\n";
}

void writeSummary(const RunSummary &summary, const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary);
  if (not out) throw IoError("cannot write " + path.string());
  out << formatSummary(summary);
  if (not out) throw IoError("failed writing " + path.string());
}

std::vector<double> rollingMean(std::span<const double> values, std::size_t window) {
  if (window < 1) throw InvalidParameterError("rolling window must be at least 1");
  std::vector<double> out(values.size(), std::numeric_limits<double>::quiet_NaN());
  double sum = 0.;
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum += values[k];
    if (k >= window) sum -= values[k - window];
    if (k + 1 >= window) out[k] = sum / static_cast<double>(window);
  }
  return out;
}

}  // namespace lanemd
