/**
 * @file Vec3.h
 * @brief Element-wise arithmetic on std::array<double, 3>.
 */

#pragma once

#include <array>
#include <cmath>

namespace lanemd {

using Vec3 = std::array<double, 3>;

namespace vec {

constexpr Vec3 add(const Vec3 &a, const Vec3 &b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }
constexpr Vec3 sub(const Vec3 &a, const Vec3 &b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
constexpr Vec3 mul(const Vec3 &a, const Vec3 &b) { return {a[0] * b[0], a[1] * b[1], a[2] * b[2]}; }
constexpr Vec3 scale(const Vec3 &a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }
constexpr double dot(const Vec3 &a, const Vec3 &b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline double norm(const Vec3 &a) { return std::sqrt(dot(a, a)); }

inline bool isFinite(const Vec3 &a) {
  return std::isfinite(a[0]) and std::isfinite(a[1]) and std::isfinite(a[2]);
}

}  // namespace vec
}  // namespace lanemd
