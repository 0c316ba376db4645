/**
 * @file ClusterLists.h
 * @brief Verlet Cluster Lists: fixed-size particle clusters with cluster-level neighbor lists.
 */

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "lanemd/particles/ParticleBuffer.h"

namespace lanemd {

/// Source index of a dummy entry.
inline constexpr std::size_t dummySource = std::numeric_limits<std::size_t>::max();
/// Id carried by dummy entries.
inline constexpr std::uint64_t dummyId = std::numeric_limits<std::uint64_t>::max();

struct BoundingBox {
  Vec3 min{0., 0., 0.};
  Vec3 max{0., 0., 0.};
};

/// Euclidean distance between two axis-aligned boxes, zero if they overlap.
double boxDistance(const BoundingBox &a, const BoundingBox &b);

struct Cluster {
  std::size_t id{0};
  /// Exactly M entries; padding entries are marked dummy.
  ParticleBuffer particles;
  /// Encloses all non-dummy members at build time.
  BoundingBox box;
  /// Index of each entry in the particle set the clusters were built from, dummySource for padding.
  std::vector<std::size_t> sources;
  /// Clusters of halo particles are only ever neighbors of owned clusters.
  bool halo{false};

  [[nodiscard]] std::size_t numDummies() const;
};

/**
 * Groups particles into clusters of exactly clusterSize entries.
 *
 * Particles are binned into a 2D x-y column grid, each column is sorted by z,
 * and the concatenated sequence is chunked. Owned and halo particles are
 * clustered separately, owned first, so ceil(N/M) clusters result per group
 * with only the last one of each group padded. Dummies sit at the cluster's
 * box minimum corner. Throws InvalidParameterError for clusterSize < 2.
 */
std::vector<Cluster> buildClusters(const ParticleBuffer &particles, std::size_t clusterSize);

/**
 * Per-cluster neighbor ids.
 *
 * Cluster z is a neighbor of k if their boxes are within range. With newton3
 * each unordered pair is stored once, in the list of the lower id; without it
 * is stored in both. Pairs of two halo clusters are never stored.
 */
struct ClusterNeighborLists {
  bool newton3{false};
  std::vector<std::vector<std::size_t>> neighbors;

  [[nodiscard]] std::size_t numPairs() const;
};

ClusterNeighborLists buildClusterNeighborLists(std::span<const Cluster> clusters, double range, bool newton3);

}  // namespace lanemd
