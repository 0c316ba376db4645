/**
 * @file Lanes.h
 * @brief Width-generic SIMD register emulation.
 *
 * Lanes<V> models one vector register of V doubles. Every operation is
 * element-wise over the lanes; the loops are written so that the compiler can
 * map them onto native vector instructions where the width fits. Half-register
 * helpers address the lower lanes [0, V/2) and upper lanes [V/2, V).
 */

#pragma once

#include <array>
#include <cstddef>

namespace lanemd::simd {

template <std::size_t V>
struct Lanes {
  static_assert(V >= 4 and (V & (V - 1)) == 0, "vector width must be a power of two >= 4");
  static constexpr std::size_t width = V;
  static constexpr std::size_t half = V / 2;

  alignas(64) std::array<double, V> v{};

  static Lanes zero() { return Lanes{}; }

  static Lanes broadcast(double x) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = x;
    return r;
  }

  /// Lower half holds lo, upper half holds hi.
  static Lanes broadcastHalves(double lo, double hi) {
    Lanes r;
    for (std::size_t l = 0; l < half; ++l) r.v[l] = lo;
    for (std::size_t l = half; l < V; ++l) r.v[l] = hi;
    return r;
  }

  /// First n lanes from memory, remaining lanes zero.
  static Lanes loadN(const double *p, std::size_t n) {
    Lanes r;
    if (n >= V) {
      for (std::size_t l = 0; l < V; ++l) r.v[l] = p[l];
    } else {
      for (std::size_t l = 0; l < n; ++l) r.v[l] = p[l];
    }
    return r;
  }

  /// Loads up to V/2 values into the lower half and duplicates them into the upper half.
  static Lanes loadHalfDuplicated(const double *p, std::size_t n) {
    Lanes r;
    const auto m = n < half ? n : half;
    for (std::size_t l = 0; l < m; ++l) {
      r.v[l] = p[l];
      r.v[l + half] = p[l];
    }
    return r;
  }

  /// Adds the first n lanes onto memory.
  void storeAddN(double *p, std::size_t n) const {
    const auto m = n < V ? n : V;
    for (std::size_t l = 0; l < m; ++l) p[l] += v[l];
  }

  void storeSubN(double *p, std::size_t n) const {
    const auto m = n < V ? n : V;
    for (std::size_t l = 0; l < m; ++l) p[l] -= v[l];
  }

  [[nodiscard]] double reduceSum() const {
    double s = 0.;
    for (std::size_t l = 0; l < V; ++l) s += v[l];
    return s;
  }
  [[nodiscard]] double reduceLowerHalf() const {
    double s = 0.;
    for (std::size_t l = 0; l < half; ++l) s += v[l];
    return s;
  }
  [[nodiscard]] double reduceUpperHalf() const {
    double s = 0.;
    for (std::size_t l = half; l < V; ++l) s += v[l];
    return s;
  }

  /// Lane-wise sum of both halves, V/2 values.
  [[nodiscard]] std::array<double, half> foldHalves() const {
    std::array<double, half> r{};
    for (std::size_t l = 0; l < half; ++l) r[l] = v[l] + v[l + half];
    return r;
  }

  friend Lanes operator+(const Lanes &a, const Lanes &b) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = a.v[l] + b.v[l];
    return r;
  }
  friend Lanes operator-(const Lanes &a, const Lanes &b) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = a.v[l] - b.v[l];
    return r;
  }
  friend Lanes operator*(const Lanes &a, const Lanes &b) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = a.v[l] * b.v[l];
    return r;
  }
  friend Lanes operator*(const Lanes &a, double s) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = a.v[l] * s;
    return r;
  }
  friend Lanes operator/(double s, const Lanes &a) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = s / a.v[l];
    return r;
  }
  Lanes &operator+=(const Lanes &o) {
    for (std::size_t l = 0; l < V; ++l) v[l] += o.v[l];
    return *this;
  }

  /// 1.0 where a < b, 0.0 elsewhere.
  friend Lanes lessThan(const Lanes &a, double b) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = a.v[l] < b ? 1. : 0.;
    return r;
  }

  /// a where mask is set, b elsewhere.
  friend Lanes blend(const Lanes &mask, const Lanes &a, double b) {
    Lanes r;
    for (std::size_t l = 0; l < V; ++l) r.v[l] = mask.v[l] != 0. ? a.v[l] : b;
    return r;
  }

  [[nodiscard]] std::size_t countNonZero() const {
    std::size_t n = 0;
    for (std::size_t l = 0; l < V; ++l) n += v[l] != 0. ? 1 : 0;
    return n;
  }
};

/// Register widths the vectorized kernels are instantiated for.
inline constexpr std::array<std::size_t, 4> supportedWidths{4, 8, 16, 32};

}  // namespace lanemd::simd
