/**
 * @file Telemetry.h
 * @brief Per-iteration CSV records and the run summary.
 */

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "lanemd/sim/Simulation.h"

namespace lanemd {

/// Column order of the iteration CSV.
inline constexpr std::array<const char *, 12> csvColumns{
    "iteration",      "phase",       "container",           "traversal",   "newton3",
    "pattern",        "metric_value", "lane_slots",         "useful_interactions",
    "blank_lanes",    "pair_interactions", "particle_count"};

std::string formatCsv(std::span<const IterationRecord> records);
std::vector<IterationRecord> parseCsv(const std::string &text);

/// Throws IoError if the path cannot be written or read.
void writeCsv(std::span<const IterationRecord> records, const std::filesystem::path &path);
std::vector<IterationRecord> readCsv(const std::filesystem::path &path);

/// JSON document.
std::string formatSummary(const RunSummary &summary);
void writeSummary(const RunSummary &summary, const std::filesystem::path &path);

/**
 * Trailing moving average: entry k is the mean of values[k-window+1 .. k],
 * NaN for the first window-1 entries (pandas rolling(window).mean()).
 */
std::vector<double> rollingMean(std::span<const double> values, std::size_t window);

}  // namespace lanemd
