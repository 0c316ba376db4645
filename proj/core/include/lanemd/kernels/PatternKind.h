/**
 * @file PatternKind.h
 * @brief Register fill orders of the vectorized pair kernel.
 */

#pragma once

#include <array>
#include <cstddef>
#include <string_view>

namespace lanemd {

/**
 * How many distinct i- and j-particles share one register of width V.
 * The name reads [i-particles]/[j-particles]; the product is always V.
 */
enum class PatternKind {
  /// 1/VectorLength: one broadcast i, V consecutive j.
  oneByV,
  /// VectorLength/1: V consecutive i, one broadcast j.
  vByOne,
  /// 2/VectorLengthDiv2: i and i+1 in the two halves, the same V/2 j in both halves.
  twoByHalf,
  /// VectorLengthDiv2/2: the same V/2 i in both halves, j and j+1 in the two halves.
  halfByTwo,
};

inline constexpr std::array<PatternKind, 4> allPatterns{PatternKind::oneByV, PatternKind::vByOne,
                                                        PatternKind::twoByHalf, PatternKind::halfByTwo};

std::string_view toString(PatternKind pattern);
PatternKind patternKindFromString(std::string_view name);

/// Throws InvalidConfigurationError unless V is a supported power of two >= 4.
void checkVectorWidth(std::size_t vectorWidth);

/// Number of distinct i-particles per register.
std::size_t iParticlesPerRegister(PatternKind pattern, std::size_t vectorWidth);
/// Number of distinct j-particles per register.
std::size_t jParticlesPerRegister(PatternKind pattern, std::size_t vectorWidth);

/// The pattern with i and j roles swapped.
PatternKind transposed(PatternKind pattern);

}  // namespace lanemd
