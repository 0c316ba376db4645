#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "lanemd/Errors.h"
#include "lanemd/kernels/PatternKind.h"
#include "lanemd/particles/Lattice.h"
#include "lanemd/sim/Scenario.h"

namespace lanemd {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> words(const std::string &value) {
  std::vector<std::string> out;
  std::istringstream in(value);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

class Entry {
 public:
  Entry(std::string key, std::string value, std::size_t line)
      : _key(std::move(key)), _value(std::move(value)), _line(line) {}

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError("line " + std::to_string(_line) + ": " + _key + ": " + what);
  }

  [[nodiscard]] double number() const {
    const auto w = words(_value);
    if (w.size() != 1) fail("expected one number");
    return parseDouble(w[0]);
  }

  [[nodiscard]] std::uint64_t integer() const {
    const auto w = words(_value);
    if (w.size() != 1) fail("expected one integer");
    return parseInteger(w[0]);
  }

  [[nodiscard]] Vec3 vector3() const {
    const auto w = words(_value);
    if (w.size() != 3) fail("expected three numbers");
    return {parseDouble(w[0]), parseDouble(w[1]), parseDouble(w[2])};
  }

  [[nodiscard]] std::array<std::size_t, 3> counts() const {
    const auto w = words(_value);
    if (w.size() != 3) fail("expected three integers");
    return {parseInteger(w[0]), parseInteger(w[1]), parseInteger(w[2])};
  }

  [[nodiscard]] bool boolean() const {
    const auto v = trim(_value);
    if (v == "true" or v == "on" or v == "1") return true;
    if (v == "false" or v == "off" or v == "0") return false;
    fail("expected true or false");
  }

  [[nodiscard]] std::vector<std::string> list() const {
    auto w = words(_value);
    if (w.empty()) fail("expected at least one value");
    return w;
  }

  [[nodiscard]] const std::string &key() const { return _key; }
  [[nodiscard]] std::string text() const { return trim(_value); }

  /// Converts library errors into parse errors that carry the line.
  template <class F>
  auto convert(F &&f) const {
    try {
      return f();
    } catch (const Error &e) {
      fail(e.what());
    }
  }

 private:
  double parseDouble(const std::string &w) const {
    double v = 0.;
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() or ptr != w.data() + w.size() or not std::isfinite(v)) fail("invalid number '" + w + "'");
    return v;
  }
  std::size_t parseInteger(const std::string &w) const {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
    if (ec != std::errc() or ptr != w.data() + w.size()) fail("invalid integer '" + w + "'");
    return v;
  }

  std::string _key;
  std::string _value;
  std::size_t _line;
};

void applyObjectKey(CubeSource &source, const Entry &e) {
  const auto &k = e.key();
  if (k == "origin") {
    source.origin = e.vector3();
  } else if (k == "counts") {
    source.counts = e.counts();
  } else if (k == "spacing") {
    source.spacing = e.number();
  } else if (k == "velocity") {
    source.velocity = e.vector3();
  } else if (k == "velocity_jitter") {
    source.velocityJitter = e.number();
  } else {
    e.fail("unknown object key");
  }
}

}  // namespace

std::vector<Particle> ScenarioSpec::generateParticles() const {
  std::vector<Particle> particles;
  std::uint64_t nextId = 0;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    const auto &source = sources[s];
    auto block = generateCubeLattice(source.origin, source.counts, source.spacing, source.velocity, nextId);
    addVelocityJitter(block, source.velocityJitter, seed + s);
    nextId += block.size();
    particles.insert(particles.end(), block.begin(), block.end());
  }
  return particles;
}

void ScenarioSpec::validate() const {
  box.validate();
  try {
    params.validate();
  } catch (const Error &e) {
    throw InvalidScenarioError(e.what());
  }
  if (sources.empty()) throw InvalidScenarioError("at least one object required");
  if (iterations < 1) throw InvalidScenarioError("iterations must be at least 1");
  try {
    checkVectorWidth(vectorWidth);
  } catch (const Error &e) {
    throw InvalidScenarioError(e.what());
  }
  if (effectiveClusterSize() < 2) throw InvalidScenarioError("cluster_size must be at least 2");
  if (rebuildPeriod < 1) throw InvalidScenarioError("rebuild_period must be at least 1");
  const auto length = box.length();
  for (int d = 0; d < 3; ++d) {
    if (length[d] < params.cutoff) {
      throw InvalidScenarioError("box is shorter than the cutoff on axis " + std::to_string(d));
    }
    if (box.periodic(d) and length[d] < params.interactionLength()) {
      throw InvalidScenarioError("periodic axis " + std::to_string(d) + " is shorter than cutoff + skin");
    }
  }
  for (const auto &source : sources) {
    if (source.counts[0] == 0 or source.counts[1] == 0 or source.counts[2] == 0) {
      throw InvalidScenarioError("object counts must be at least 1");
    }
    if (not(source.spacing > 0.)) throw InvalidScenarioError("object spacing must be positive");
    Vec3 far{};
    for (int d = 0; d < 3; ++d) {
      far[d] = source.origin[d] + static_cast<double>(source.counts[d] - 1) * source.spacing;
    }
    if (not box.contains(source.origin) or not box.contains(far)) {
      throw InvalidScenarioError("object does not fit inside the box");
    }
  }
  if (fixedConfig) {
    if (not isValid(*fixedConfig)) throw InvalidScenarioError("fixed configuration is invalid");
  } else {
    const auto space = enumerateSearchSpace(searchSpace);
    if (tuning.samplesPerConfig < 1) throw InvalidScenarioError("samples must be at least 1");
    if (tuning.tuningInterval < tuning.samplesPerConfig * space.size()) {
      throw InvalidScenarioError("tuning_interval must be at least samples * number of configurations (" +
                                 std::to_string(tuning.samplesPerConfig * space.size()) + ")");
    }
  }
}

ScenarioSpec parseScenarioText(std::string_view text) {
  ScenarioSpec spec;
  std::set<std::string> seen;
  std::optional<double> skin;
  CubeSource *object = nullptr;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineNumber = 0;
  while (std::getline(in, raw)) {
    ++lineNumber;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    if (trim(raw).empty()) continue;

    const bool indented = raw.front() == ' ' or raw.front() == '\t';
    const auto colon = raw.find(':');
    if (colon == std::string::npos) {
      throw ParseError("line " + std::to_string(lineNumber) + ": expected 'key: value'");
    }
    const Entry e(trim(std::string_view(raw).substr(0, colon)), raw.substr(colon + 1), lineNumber);

    if (indented) {
      if (object == nullptr) e.fail("indented key outside of an object block");
      applyObjectKey(*object, e);
      continue;
    }
    object = nullptr;

    const auto &k = e.key();
    if (k == "object") {
      if (not e.text().empty()) e.fail("object takes its keys on the following indented lines");
      spec.sources.emplace_back();
      object = &spec.sources.back();
      continue;
    }
    if (not seen.insert(k).second) e.fail("duplicate key");

    if (k == "box_min") {
      spec.box.min = e.vector3();
    } else if (k == "box_max") {
      spec.box.max = e.vector3();
    } else if (k == "boundary") {
      const auto w = e.list();
      if (w.size() != 1 and w.size() != 3) e.fail("expected one or three boundary types");
      for (int d = 0; d < 3; ++d) {
        spec.box.boundary[d] = e.convert([&] { return boundaryTypeFromString(w[w.size() == 1 ? 0 : d]); });
      }
    } else if (k == "cutoff") {
      spec.params.cutoff = e.number();
    } else if (k == "skin") {
      skin = e.number();
    } else if (k == "epsilon") {
      spec.params.epsilon = e.number();
    } else if (k == "sigma") {
      spec.params.sigma = e.number();
    } else if (k == "mass") {
      spec.params.mass = e.number();
    } else if (k == "dt") {
      spec.params.dt = e.number();
    } else if (k == "iterations") {
      spec.iterations = e.integer();
    } else if (k == "seed") {
      spec.seed = e.integer();
    } else if (k == "vector_width") {
      spec.vectorWidth = e.integer();
    } else if (k == "cluster_size") {
      spec.clusterSize = e.integer();
    } else if (k == "rebuild_period") {
      spec.rebuildPeriod = e.integer();
    } else if (k == "samples") {
      spec.tuning.samplesPerConfig = e.integer();
    } else if (k == "tuning_interval") {
      spec.tuning.tuningInterval = e.integer();
    } else if (k == "reduction") {
      spec.tuning.reduction = e.convert([&] { return reductionFromString(e.text()); });
    } else if (k == "retake_on_rebuild") {
      spec.tuning.retakeOnRebuild = e.boolean();
    } else if (k == "metric") {
      spec.metric = e.text();
    } else if (k == "containers") {
      spec.searchSpace.containers.clear();
      for (const auto &w : e.list()) {
        spec.searchSpace.containers.push_back(e.convert([&] { return containerKindFromString(w); }));
      }
    } else if (k == "traversals") {
      spec.searchSpace.traversals.clear();
      for (const auto &w : e.list()) {
        spec.searchSpace.traversals.push_back(e.convert([&] { return traversalKindFromString(w); }));
      }
    } else if (k == "newton3") {
      spec.searchSpace.newton3.clear();
      for (const auto &w : e.list()) {
        spec.searchSpace.newton3.push_back(e.convert([&] { return newton3FromString(w); }));
      }
    } else if (k == "patterns") {
      spec.searchSpace.patterns.clear();
      for (const auto &w : e.list()) {
        spec.searchSpace.patterns.push_back(e.convert([&] { return patternKindFromString(w); }));
      }
    } else if (k == "fixed_config") {
      spec.fixedConfig = e.convert([&] { return configurationFromString(e.text()); });
    } else if (k == "csv") {
      spec.csvPath = e.text();
    } else if (k == "summary") {
      spec.summaryPath = e.text();
    } else {
      e.fail("unknown key");
    }
  }

  for (const char *required : {"box_min", "box_max", "cutoff", "iterations"}) {
    if (not seen.contains(required)) throw ParseError(std::string(required) + " required");
  }
  if (spec.sources.empty()) throw ParseError("object required");

  spec.params.skin = skin.value_or(0.2 * spec.params.cutoff);
  spec.validate();
  return spec;
}

ScenarioSpec parseScenario(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (not in) throw IoError("cannot open scenario file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseScenarioText(buffer.str());
}

}  // namespace lanemd
