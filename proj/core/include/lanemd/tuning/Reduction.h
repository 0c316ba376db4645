/**
 * @file Reduction.h
 */

#pragma once

#include <span>
#include <string_view>

namespace lanemd {

enum class Reduction { mean, min, median };

std::string_view toString(Reduction reduction);
Reduction reductionFromString(std::string_view name);

/// Mean, minimum or median (mean of the middle pair for even counts). Throws on empty input.
double reduceSamples(std::span<const double> samples, Reduction reduction);

}  // namespace lanemd
