/**
 * @file LJParams.h
 */

#pragma once

namespace lanemd {

/**
 * Lennard-Jones and integration parameters in reduced units.
 */
struct LJParams {
  double epsilon{1.};
  double sigma{1.};
  double cutoff{2.5};
  double skin{0.5};
  double mass{1.};
  double dt{0.001};

  /// Cutoff plus skin, the range neighbor structures are built for.
  [[nodiscard]] double interactionLength() const { return cutoff + skin; }

  /// Throws InvalidParameterError unless every value is positive (skin may be zero).
  void validate() const;
};

}  // namespace lanemd
