/**
 * @file Configuration.h
 * @brief One point of the tuning search space.
 */

#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "lanemd/kernels/PatternKind.h"
#include "lanemd/traversals/Schedule.h"

namespace lanemd {

enum class ContainerKind { linkedCells, verletClusterLists };

std::string_view toString(ContainerKind container);
ContainerKind containerKindFromString(std::string_view name);

/// Accepts on/off, true/false and 1/0.
bool newton3FromString(std::string_view text);
std::string_view newton3ToString(bool newton3);

struct Configuration {
  ContainerKind container{ContainerKind::linkedCells};
  TraversalKind traversal{TraversalKind::lc_c08};
  bool newton3{true};
  PatternKind pattern{PatternKind::oneByV};

  auto operator<=>(const Configuration &) const = default;

  /// container,traversal,newton3,pattern
  [[nodiscard]] std::string toString() const;
};

/// Parses the comma separated form produced by Configuration::toString.
Configuration configurationFromString(std::string_view text);

/**
 * lc_c01 requires newton3 off; the vcl traversal pairs with the cluster
 * container and the lc_* traversals with Linked Cells.
 */
bool isValid(const Configuration &config);

struct SearchSpaceOptions {
  std::vector<ContainerKind> containers{ContainerKind::linkedCells, ContainerKind::verletClusterLists};
  std::vector<TraversalKind> traversals{TraversalKind::lc_c01, TraversalKind::lc_c08, TraversalKind::lc_c18,
                                        TraversalKind::vcl};
  std::vector<bool> newton3{false, true};
  std::vector<PatternKind> patterns{allPatterns.begin(), allPatterns.end()};
};

/**
 * Valid part of the cartesian product of the option lists, ordered
 * lexicographically by (container, traversal, newton3, pattern) in enum order.
 * Duplicates are dropped. Throws InvalidConfigurationError if an option list
 * is empty or nothing valid remains.
 */
std::vector<Configuration> enumerateSearchSpace(const SearchSpaceOptions &options);

}  // namespace lanemd
