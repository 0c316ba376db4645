/**
 * @file MetricProvider.h
 * @brief Performance metrics sampled around the force phase.
 */

#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <memory>
#include <string_view>
#include <vector>

#include "lanemd/kernels/KernelStats.h"

namespace lanemd {

/**
 * A metric brackets exactly one force phase (traversal plus kernels) and
 * returns one non-negative sample for it. The kernel statistics of the region
 * are handed to endRegion for providers that derive their value from them.
 */
class MetricProvider {
 public:
  virtual ~MetricProvider() = default;

  virtual void beginRegion() = 0;
  virtual double endRegion(const KernelStats &regionStats) = 0;
  [[nodiscard]] virtual std::string_view name() const = 0;
};

/// Monotonic wall clock, nanoseconds.
class WallClockMetric final : public MetricProvider {
 public:
  void beginRegion() override;
  double endRegion(const KernelStats &regionStats) override;
  [[nodiscard]] std::string_view name() const override { return "time"; }

 private:
  std::chrono::steady_clock::time_point _start{};
};

/**
 * Deterministic energy proxy: the number of lane slots the kernels executed
 * in the region. A pure function of particle state and configuration.
 */
class LaneOpMetric final : public MetricProvider {
 public:
  void beginRegion() override {}
  double endRegion(const KernelStats &regionStats) override;
  [[nodiscard]] std::string_view name() const override { return "laneops"; }
};

/**
 * Replays externally recorded readings, one per force phase, in order.
 * Throws IoError once the readings are exhausted.
 */
class ReplayMetric final : public MetricProvider {
 public:
  explicit ReplayMetric(std::vector<double> values);

  /// Plain text, one non-negative decimal per line. Blank lines are skipped.
  static ReplayMetric fromFile(const std::filesystem::path &path);

  void beginRegion() override {}
  double endRegion(const KernelStats &regionStats) override;
  [[nodiscard]] std::string_view name() const override { return "replay"; }

  [[nodiscard]] std::size_t consumed() const { return _next; }

 private:
  std::vector<double> _values;
  std::size_t _next{0};
};

/// "time", "laneops" or "replay:<file>".
std::unique_ptr<MetricProvider> makeMetricProvider(std::string_view spec);

}  // namespace lanemd
