#include "lanemd/traversals/Schedule.h"

#include <algorithm>
#include <map>
#include <string>

#include "lanemd/Errors.h"

namespace lanemd {

std::string_view toString(TraversalKind kind) {
  switch (kind) {
    case TraversalKind::lc_c01:
      return "lc_c01";
    case TraversalKind::lc_c08:
      return "lc_c08";
    case TraversalKind::lc_c18:
      return "lc_c18";
    case TraversalKind::vcl:
      return "vcl";
  }
  return "unknown";
}

TraversalKind traversalKindFromString(std::string_view name) {
  for (auto kind : {TraversalKind::lc_c01, TraversalKind::lc_c08, TraversalKind::lc_c18, TraversalKind::vcl}) {
    if (toString(kind) == name) return kind;
  }
  throw InvalidConfigurationError("unknown traversal '" + std::string(name) + "'");
}

void checkTraversal(TraversalKind kind, bool newton3) {
  if (kind == TraversalKind::lc_c01 and newton3) {
    throw InvalidConfigurationError("lc_c01 only works with newton3 disabled");
  }
}

namespace {

class CellSpace {
 public:
  CellSpace(const CellIndex3D &cellsPerAxis, const std::array<bool, 3> &haloAxis) : _cells(cellsPerAxis) {
    for (int d = 0; d < 3; ++d) {
      if (cellsPerAxis[d] < 1) throw InvalidParameterError("grid needs at least one cell per axis");
      _lo[d] = haloAxis[d] ? -1 : 0;
      _hi[d] = haloAxis[d] ? cellsPerAxis[d] : cellsPerAxis[d] - 1;
    }
  }

  [[nodiscard]] bool inside(const CellIndex3D &c) const {
    for (int d = 0; d < 3; ++d) {
      if (c[d] < _lo[d] or c[d] > _hi[d]) return false;
    }
    return true;
  }
  [[nodiscard]] bool owned(const CellIndex3D &c) const {
    for (int d = 0; d < 3; ++d) {
      if (c[d] < 0 or c[d] >= _cells[d]) return false;
    }
    return true;
  }
  [[nodiscard]] std::size_t index(const CellIndex3D &c) const {
    const auto dx = static_cast<std::size_t>(_cells[0] + 2);
    const auto dy = static_cast<std::size_t>(_cells[1] + 2);
    return static_cast<std::size_t>(c[0] + 1) +
           dx * (static_cast<std::size_t>(c[1] + 1) + dy * static_cast<std::size_t>(c[2] + 1));
  }
  /// Coordinate relative to the lower corner of the traversed space.
  [[nodiscard]] int rel(const CellIndex3D &c, int d) const { return c[d] - _lo[d]; }

  template <class F>
  void forEach(F &&f) const {
    for (int z = _lo[2]; z <= _hi[2]; ++z) {
      for (int y = _lo[1]; y <= _hi[1]; ++y) {
        for (int x = _lo[0]; x <= _hi[0]; ++x) {
          f(CellIndex3D{x, y, z});
        }
      }
    }
  }

 private:
  CellIndex3D _cells;
  CellIndex3D _lo{};
  CellIndex3D _hi{};
};

CellIndex3D shifted(const CellIndex3D &c, int dx, int dy, int dz) { return {c[0] + dx, c[1] + dy, c[2] + dz}; }

struct ScheduleBuilder {
  Schedule schedule;
  std::size_t baseStep{0};
  int color{0};
  bool any{false};

  void unit(std::size_t i, std::size_t j) {
    schedule.units.push_back({i, j, i == j, color, baseStep});
    any = true;
  }
  /// Unordered pair with newton3, both directions without.
  void pair(std::size_t i, std::size_t j) {
    unit(i, j);
    if (not schedule.newton3) unit(j, i);
  }
  void nextBaseStep() {
    if (any) ++baseStep;
    any = false;
  }
  void finish() {
    std::stable_sort(schedule.units.begin(), schedule.units.end(), [](const WorkUnit &a, const WorkUnit &b) {
      if (a.color != b.color) return a.color < b.color;
      return a.baseStep < b.baseStep;
    });
  }
};

}  // namespace

Schedule scheduleLinkedCells(const CellIndex3D &cellsPerAxis, const std::array<bool, 3> &haloAxis, TraversalKind kind,
                             bool newton3) {
  if (kind == TraversalKind::vcl) throw InvalidConfigurationError("vcl traversal needs the cluster container");
  checkTraversal(kind, newton3);
  const CellSpace space(cellsPerAxis, haloAxis);

  ScheduleBuilder b;
  b.schedule.kind = kind;
  b.schedule.newton3 = newton3;

  switch (kind) {
    case TraversalKind::lc_c01: {
      b.schedule.numColors = 1;
      space.forEach([&](const CellIndex3D &base) {
        const bool baseOwned = space.owned(base);
        for (int dz = -1; dz <= 1; ++dz) {
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              const auto other = shifted(base, dx, dy, dz);
              if (not space.inside(other)) continue;
              const bool self = dx == 0 and dy == 0 and dz == 0;
              if (self ? not baseOwned : not(baseOwned or space.owned(other))) continue;
              b.unit(space.index(base), space.index(other));
            }
          }
        }
        b.nextBaseStep();
      });
      break;
    }
    case TraversalKind::lc_c18: {
      b.schedule.numColors = 18;
      space.forEach([&](const CellIndex3D &base) {
        b.color = space.rel(base, 0) % 3 + 3 * (space.rel(base, 1) % 3) + 9 * (space.rel(base, 2) % 2);
        const bool baseOwned = space.owned(base);
        if (baseOwned) b.unit(space.index(base), space.index(base));
        for (int dz = 0; dz <= 1; ++dz) {
          for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
              // forward half of the 27-neighborhood
              if ((dx + 1) + 3 * (dy + 1) + 9 * (dz + 1) <= 13) continue;
              const auto other = shifted(base, dx, dy, dz);
              if (not space.inside(other)) continue;
              if (not(baseOwned or space.owned(other))) continue;
              b.pair(space.index(base), space.index(other));
            }
          }
        }
        b.nextBaseStep();
      });
      break;
    }
    case TraversalKind::lc_c08: {
      b.schedule.numColors = 8;
      const auto corner = [](const CellIndex3D &base, int bits) {
        return shifted(base, bits & 1, (bits >> 1) & 1, (bits >> 2) & 1);
      };
      space.forEach([&](const CellIndex3D &base) {
        b.color = space.rel(base, 0) % 2 + 2 * (space.rel(base, 1) % 2) + 4 * (space.rel(base, 2) % 2);
        if (space.owned(base)) b.unit(space.index(base), space.index(base));
        for (int p = 0; p < 8; ++p) {
          for (int q = p + 1; q < 8; ++q) {
            // the block owns exactly the pairs whose componentwise minimum is its origin
            if ((p & q) != 0) continue;
            const auto cellP = corner(base, p);
            const auto cellQ = corner(base, q);
            if (not space.inside(cellP) or not space.inside(cellQ)) continue;
            if (not(space.owned(cellP) or space.owned(cellQ))) continue;
            b.pair(space.index(cellP), space.index(cellQ));
          }
        }
        b.nextBaseStep();
      });
      break;
    }
    case TraversalKind::vcl:
      break;
  }
  b.finish();
  return b.schedule;
}

Schedule scheduleLinkedCells(const CellGrid &grid, TraversalKind kind, bool newton3) {
  return scheduleLinkedCells(grid.cellsPerAxis, grid.haloAxis, kind, newton3);
}

Schedule scheduleClusters(std::span<const Cluster> clusters, const ClusterNeighborLists &lists) {
  if (lists.neighbors.size() != clusters.size()) {
    throw InvalidParameterError("neighbor lists do not match the cluster set");
  }
  ScheduleBuilder b;
  b.schedule.kind = TraversalKind::vcl;
  b.schedule.newton3 = lists.newton3;

  // colorsWriting[c]: colors of base steps that already write cluster c
  std::vector<std::vector<int>> colorsWriting(lists.newton3 ? clusters.size() : 0);
  int numColors = 1;

  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const auto &neighbors = lists.neighbors[k];
    if (clusters[k].halo and neighbors.empty()) continue;

    if (lists.newton3) {
      std::vector<bool> taken;
      const auto block = [&](std::size_t c) {
        for (const int color : colorsWriting[c]) {
          if (static_cast<std::size_t>(color) >= taken.size()) taken.resize(color + 1, false);
          taken[color] = true;
        }
      };
      block(k);
      for (const auto z : neighbors) block(z);
      int color = 0;
      while (static_cast<std::size_t>(color) < taken.size() and taken[color]) ++color;
      colorsWriting[k].push_back(color);
      for (const auto z : neighbors) colorsWriting[z].push_back(color);
      b.color = color;
      numColors = std::max(numColors, color + 1);
    }

    if (not clusters[k].halo) b.unit(k, k);
    for (const auto z : neighbors) b.unit(k, z);
    b.nextBaseStep();
  }
  b.schedule.numColors = numColors;
  b.finish();
  return b.schedule;
}

bool verifyColoring(const Schedule &schedule) {
  // (color, buffer) -> base step writing it
  std::map<std::pair<int, std::size_t>, std::size_t> writer;
  const auto claim = [&](int color, std::size_t buffer, std::size_t baseStep) {
    const auto [it, inserted] = writer.try_emplace({color, buffer}, baseStep);
    return inserted or it->second == baseStep;
  };
  for (const auto &unit : schedule.units) {
    if (not claim(unit.color, unit.i, unit.baseStep)) return false;
    if (schedule.newton3 and not claim(unit.color, unit.j, unit.baseStep)) return false;
  }
  return true;
}

}  // namespace lanemd
