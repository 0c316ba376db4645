#include "lanemd/tuning/Configuration.h"

#include <algorithm>
#include <sstream>

#include "lanemd/Errors.h"

namespace lanemd {

std::string_view toString(ContainerKind container) {
  return container == ContainerKind::linkedCells ? "LinkedCells" : "VerletClusterLists";
}

ContainerKind containerKindFromString(std::string_view name) {
  if (name == "LinkedCells") return ContainerKind::linkedCells;
  if (name == "VerletClusterLists") return ContainerKind::verletClusterLists;
  throw InvalidConfigurationError("unknown container '" + std::string(name) + "'");
}

bool newton3FromString(std::string_view text) {
  if (text == "on" or text == "true" or text == "1") return true;
  if (text == "off" or text == "false" or text == "0") return false;
  throw InvalidConfigurationError("invalid newton3 value '" + std::string(text) + "'");
}

std::string_view newton3ToString(bool newton3) { return newton3 ? "on" : "off"; }

std::string Configuration::toString() const {
  std::string s;
  s += lanemd::toString(container);
  s += ',';
  s += lanemd::toString(traversal);
  s += ',';
  s += newton3ToString(newton3);
  s += ',';
  s += lanemd::toString(pattern);
  return s;
}

Configuration configurationFromString(std::string_view text) {
  std::vector<std::string> fields;
  std::stringstream stream{std::string(text)};
  std::string field;
  while (std::getline(stream, field, ',')) fields.push_back(field);
  if (fields.size() != 4) {
    throw InvalidConfigurationError("configuration needs container,traversal,newton3,pattern: '" + std::string(text) +
                                    "'");
  }
  Configuration config;
  config.container = containerKindFromString(fields[0]);
  config.traversal = traversalKindFromString(fields[1]);
  config.newton3 = newton3FromString(fields[2]);
  config.pattern = patternKindFromString(fields[3]);
  if (not isValid(config)) throw InvalidConfigurationError("invalid configuration '" + std::string(text) + "'");
  return config;
}

bool isValid(const Configuration &config) {
  if (config.traversal == TraversalKind::lc_c01 and config.newton3) return false;
  const bool clusterTraversal = config.traversal == TraversalKind::vcl;
  return clusterTraversal == (config.container == ContainerKind::verletClusterLists);
}

namespace {
template <class T>
std::vector<T> sortedUnique(std::vector<T> values, const char *name) {
  if (values.empty()) throw InvalidConfigurationError(std::string("empty option list: ") + name);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}
}  // namespace

std::vector<Configuration> enumerateSearchSpace(const SearchSpaceOptions &options) {
  const auto containers = sortedUnique(options.containers, "containers");
  const auto traversals = sortedUnique(options.traversals, "traversals");
  const auto newton3 = sortedUnique(options.newton3, "newton3");
  const auto patterns = sortedUnique(options.patterns, "patterns");

  std::vector<Configuration> space;
  for (const auto container : containers) {
    for (const auto traversal : traversals) {
      for (const bool n3 : newton3) {
        for (const auto pattern : patterns) {
          const Configuration config{container, traversal, n3, pattern};
          if (isValid(config)) space.push_back(config);
        }
      }
    }
  }
  if (space.empty()) throw InvalidConfigurationError("search space contains no valid configuration");
  return space;
}

}  // namespace lanemd
