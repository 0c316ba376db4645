#include "lanemd/containers/ClusterLists.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lanemd/Errors.h"

namespace lanemd {

double boxDistance(const BoundingBox &a, const BoundingBox &b) {
  double sum = 0.;
  for (int d = 0; d < 3; ++d) {
    const double gap = std::max({0., a.min[d] - b.max[d], b.min[d] - a.max[d]});
    sum += gap * gap;
  }
  return std::sqrt(sum);
}

std::size_t Cluster::numDummies() const {
  return static_cast<std::size_t>(std::count(particles.ownership.begin(), particles.ownership.end(), Ownership::dummy));
}

std::size_t ClusterNeighborLists::numPairs() const {
  std::size_t n = 0;
  for (const auto &list : neighbors) n += list.size();
  return n;
}

namespace {

/// Column-major order: x-y column first, then z, then input order.
std::vector<std::size_t> columnOrder(const ParticleBuffer &particles, std::span<const std::size_t> members,
                                     std::size_t clusterSize) {
  if (members.empty()) return {};

  Vec3 lo{particles.posX[members[0]], particles.posY[members[0]], particles.posZ[members[0]]};
  Vec3 hi = lo;
  for (const auto k : members) {
    const auto x = particles.position(k);
    for (int d = 0; d < 3; ++d) {
      lo[d] = std::min(lo[d], x[d]);
      hi[d] = std::max(hi[d], x[d]);
    }
  }

  // column side so that a column segment of clusterSize particles is roughly cubic
  const double volume = std::max(1e-12, (hi[0] - lo[0]) * (hi[1] - lo[1]) * (hi[2] - lo[2]));
  double side = std::cbrt(volume * static_cast<double>(clusterSize) / static_cast<double>(members.size()));
  if (not(side > 0.) or not std::isfinite(side)) side = 1.;
  const auto columnsX = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi[0] - lo[0]) / side)));
  const auto columnsY = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((hi[1] - lo[1]) / side)));

  const auto column = [&](std::size_t k) {
    const auto cx = std::min(columnsX - 1, static_cast<std::size_t>((particles.posX[k] - lo[0]) / side));
    const auto cy = std::min(columnsY - 1, static_cast<std::size_t>((particles.posY[k] - lo[1]) / side));
    return cx + columnsX * cy;
  };

  std::vector<std::size_t> order(members.begin(), members.end());
  std::vector<std::size_t> columns(particles.size());
  for (const auto k : members) columns[k] = column(k);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (columns[a] != columns[b]) return columns[a] < columns[b];
    return particles.posZ[a] < particles.posZ[b];
  });
  return order;
}

void appendClusters(const ParticleBuffer &particles, std::span<const std::size_t> order, std::size_t clusterSize,
                    bool halo, std::vector<Cluster> &out) {
  for (std::size_t start = 0; start < order.size(); start += clusterSize) {
    Cluster cluster;
    cluster.id = out.size();
    cluster.halo = halo;
    const auto end = std::min(order.size(), start + clusterSize);

    cluster.box.min = particles.position(order[start]);
    cluster.box.max = cluster.box.min;
    for (auto n = start; n < end; ++n) {
      const auto k = order[n];
      const auto x = particles.position(k);
      for (int d = 0; d < 3; ++d) {
        cluster.box.min[d] = std::min(cluster.box.min[d], x[d]);
        cluster.box.max[d] = std::max(cluster.box.max[d], x[d]);
      }
      cluster.particles.push_back(particles.particle(k));
      cluster.sources.push_back(k);
    }

    Particle dummy;
    dummy.id = dummyId;
    dummy.position = cluster.box.min;
    dummy.ownership = Ownership::dummy;
    while (cluster.particles.size() < clusterSize) {
      cluster.particles.push_back(dummy);
      cluster.sources.push_back(dummySource);
    }
    out.push_back(std::move(cluster));
  }
}

}  // namespace

std::vector<Cluster> buildClusters(const ParticleBuffer &particles, std::size_t clusterSize) {
  if (clusterSize < 2) throw InvalidParameterError("cluster size must be at least 2");

  std::vector<std::size_t> owned;
  std::vector<std::size_t> halo;
  for (std::size_t k = 0; k < particles.size(); ++k) {
    if (particles.ownership[k] == Ownership::owned) owned.push_back(k);
    if (particles.ownership[k] == Ownership::halo) halo.push_back(k);
  }

  std::vector<Cluster> clusters;
  clusters.reserve((owned.size() + clusterSize - 1) / clusterSize + (halo.size() + clusterSize - 1) / clusterSize);
  appendClusters(particles, columnOrder(particles, owned, clusterSize), clusterSize, false, clusters);
  appendClusters(particles, columnOrder(particles, halo, clusterSize), clusterSize, true, clusters);
  return clusters;
}

ClusterNeighborLists buildClusterNeighborLists(std::span<const Cluster> clusters, double range, bool newton3) {
  ClusterNeighborLists lists;
  lists.newton3 = newton3;
  lists.neighbors.resize(clusters.size());

  // sweep along x: candidates are sorted by box minimum
  std::vector<std::size_t> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return clusters[a].box.min[0] < clusters[b].box.min[0];
  });

  for (std::size_t oa = 0; oa < order.size(); ++oa) {
    const auto &a = clusters[order[oa]];
    for (std::size_t ob = oa + 1; ob < order.size(); ++ob) {
      const auto &b = clusters[order[ob]];
      if (b.box.min[0] > a.box.max[0] + range) break;
      if (a.halo and b.halo) continue;
      if (boxDistance(a.box, b.box) > range) continue;
      const auto lower = std::min(a.id, b.id);
      const auto upper = std::max(a.id, b.id);
      lists.neighbors[lower].push_back(upper);
      if (not newton3) lists.neighbors[upper].push_back(lower);
    }
  }
  for (auto &list : lists.neighbors) std::sort(list.begin(), list.end());
  return lists;
}

}  // namespace lanemd
