/**
 * @file LJKernel.h
 * @brief Lennard-Jones 12-6 pair kernels over particle buffers.
 *
 * Both kernels take an i-buffer and a j-buffer. Forces are added to owned and
 * halo i entries; with newton3 the negated force is also applied to j. Inside a
 * single buffer (sameBuffer) newton3 computes each pair once (j > i), without
 * newton3 every ordered pair j != i is visited. Dummy entries never interact.
 */

#pragma once

#include <cstddef>

#include "lanemd/kernels/KernelStats.h"
#include "lanemd/kernels/PatternKind.h"
#include "lanemd/particles/LJParams.h"
#include "lanemd/particles/ParticleBuffer.h"

namespace lanemd {

/// Precomputed kernel constants.
struct LJConstants {
  explicit LJConstants(const LJParams &params)
      : epsilon24(24. * params.epsilon),
        sigma6(params.sigma * params.sigma * params.sigma * params.sigma * params.sigma * params.sigma),
        cutoff2(params.cutoff * params.cutoff) {}

  double epsilon24;
  double sigma6;
  double cutoff2;
};

/**
 * Force on i for displacement d = r_i - r_j:
 * 24 eps (2 (sigma/r)^12 - (sigma/r)^6) d / r^2, zero for r >= cutoff.
 * Throws OverlappingParticlesError for r = 0.
 */
Vec3 ljPairForce(const Vec3 &d, const LJParams &params);

/// Plain double loop, the reference path.
void computePairScalar(ParticleBuffer &iBuffer, ParticleBuffer &jBuffer, const LJParams &params, bool newton3,
                       bool sameBuffer, KernelStats &stats);

/**
 * Register-blocked kernel emulating a vector width of vectorWidth lanes.
 *
 * Every invocation takes iParticlesPerRegister(pattern) i entries and
 * jParticlesPerRegister(pattern) j entries. Cutoff, self, dummy, and tail
 * exclusions form one lane mask multiplied into the force. The i accumulator
 * is stored once per i block: reduce-sum (1/V), per-half reduction (2/(V/2)),
 * vector add (V/1) or folded halves (V/2 / 2). The newton3 j update uses the
 * store of the transposed pattern.
 */
void computePairVectorized(ParticleBuffer &iBuffer, ParticleBuffer &jBuffer, const LJParams &params, bool newton3,
                           bool sameBuffer, PatternKind pattern, std::size_t vectorWidth, KernelStats &stats);

/**
 * ceil(Ni/a) * ceil(Nj/b) * V - Ni * Nj: blank lanes of one vectorized call on
 * distinct buffers without dummies.
 */
std::uint64_t blanksExpected(PatternKind pattern, std::size_t numI, std::size_t numJ, std::size_t vectorWidth);

/**
 * Pair kernel selection bundled into a callable for schedule execution.
 * A missing pattern selects the scalar path.
 */
class PairKernel {
 public:
  PairKernel(const LJParams &params, bool newton3, std::size_t vectorWidth, PatternKind pattern);
  PairKernel(const LJParams &params, bool newton3);

  void operator()(ParticleBuffer &iBuffer, ParticleBuffer &jBuffer, bool sameBuffer);

  [[nodiscard]] const KernelStats &stats() const { return _stats; }
  void resetStats() { _stats = {}; }

 private:
  LJParams _params;
  bool _newton3;
  bool _vectorized;
  std::size_t _vectorWidth{0};
  PatternKind _pattern{PatternKind::oneByV};
  KernelStats _stats;
};

}  // namespace lanemd
