#include "lanemd/kernels/PatternKind.h"

#include <algorithm>
#include <string>

#include "lanemd/Errors.h"
#include "lanemd/kernels/Lanes.h"

namespace lanemd {

std::string_view toString(PatternKind pattern) {
  switch (pattern) {
    case PatternKind::oneByV:
      return "1/VectorLength";
    case PatternKind::vByOne:
      return "VectorLength/1";
    case PatternKind::twoByHalf:
      return "2/VectorLengthDiv2";
    case PatternKind::halfByTwo:
      return "VectorLengthDiv2/2";
  }
  return "unknown";
}

PatternKind patternKindFromString(std::string_view name) {
  for (auto pattern : allPatterns) {
    if (toString(pattern) == name) return pattern;
  }
  throw InvalidConfigurationError("unknown vectorization pattern '" + std::string(name) + "'");
}

void checkVectorWidth(std::size_t vectorWidth) {
  if (std::find(simd::supportedWidths.begin(), simd::supportedWidths.end(), vectorWidth) ==
      simd::supportedWidths.end()) {
    throw InvalidConfigurationError("unsupported vector width " + std::to_string(vectorWidth) +
                                    " (expected 4, 8, 16 or 32)");
  }
}

std::size_t iParticlesPerRegister(PatternKind pattern, std::size_t vectorWidth) {
  switch (pattern) {
    case PatternKind::oneByV:
      return 1;
    case PatternKind::vByOne:
      return vectorWidth;
    case PatternKind::twoByHalf:
      return 2;
    case PatternKind::halfByTwo:
      return vectorWidth / 2;
  }
  return 1;
}

std::size_t jParticlesPerRegister(PatternKind pattern, std::size_t vectorWidth) {
  return vectorWidth / iParticlesPerRegister(pattern, vectorWidth);
}

PatternKind transposed(PatternKind pattern) {
  switch (pattern) {
    case PatternKind::oneByV:
      return PatternKind::vByOne;
    case PatternKind::vByOne:
      return PatternKind::oneByV;
    case PatternKind::twoByHalf:
      return PatternKind::halfByTwo;
    case PatternKind::halfByTwo:
      return PatternKind::twoByHalf;
  }
  return pattern;
}

}  // namespace lanemd
