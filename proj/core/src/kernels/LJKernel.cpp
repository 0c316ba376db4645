#include "lanemd/kernels/LJKernel.h"

#include <algorithm>
#include <string>

#include "lanemd/Errors.h"
#include "lanemd/kernels/Lanes.h"

namespace lanemd {

namespace {

[[noreturn]] void overlapping(std::uint64_t a, std::uint64_t b) {
  throw OverlappingParticlesError("particles " + std::to_string(a) + " and " + std::to_string(b) +
                                  " share a position");
}

/// Self pairs inside one buffer: newton3 keeps j > i, otherwise j != i.
inline bool excludedSelfPair(bool sameBuffer, bool newton3, std::size_t i, std::size_t j) {
  return sameBuffer and (newton3 ? j <= i : j == i);
}

}  // namespace

Vec3 ljPairForce(const Vec3 &d, const LJParams &params) {
  const LJConstants c(params);
  const double r2 = vec::dot(d, d);
  if (r2 == 0.) throw OverlappingParticlesError("pair distance is zero");
  if (r2 >= c.cutoff2) return {0., 0., 0.};
  const double invr2 = 1. / r2;
  const double lj6 = c.sigma6 * invr2 * invr2 * invr2;
  const double lj12 = lj6 * lj6;
  const double fac = c.epsilon24 * (lj12 + lj12 - lj6) * invr2;
  return vec::scale(d, fac);
}

void computePairScalar(ParticleBuffer &iBuf, ParticleBuffer &jBuf, const LJParams &params, bool newton3,
                       bool sameBuffer, KernelStats &stats) {
  const LJConstants c(params);
  const std::size_t ni = iBuf.size();
  const std::size_t nj = jBuf.size();

  for (std::size_t i = 0; i < ni; ++i) {
    if (iBuf.ownership[i] == Ownership::dummy) continue;
    double fxAcc = 0., fyAcc = 0., fzAcc = 0.;
    for (std::size_t j = 0; j < nj; ++j) {
      if (jBuf.ownership[j] == Ownership::dummy or excludedSelfPair(sameBuffer, newton3, i, j)) continue;
      ++stats.kernelInvocations;
      ++stats.laneSlots;
      ++stats.usefulInteractions;

      const double dx = iBuf.posX[i] - jBuf.posX[j];
      const double dy = iBuf.posY[i] - jBuf.posY[j];
      const double dz = iBuf.posZ[i] - jBuf.posZ[j];
      const double r2 = dx * dx + dy * dy + dz * dz;
      if (r2 == 0.) overlapping(iBuf.id[i], jBuf.id[j]);
      if (r2 >= c.cutoff2) continue;
      ++stats.pairInteractions;

      const double invr2 = 1. / r2;
      const double lj6 = c.sigma6 * invr2 * invr2 * invr2;
      const double lj12 = lj6 * lj6;
      const double fac = c.epsilon24 * (lj12 + lj12 - lj6) * invr2;
      const double fx = dx * fac;
      const double fy = dy * fac;
      const double fz = dz * fac;
      fxAcc += fx;
      fyAcc += fy;
      fzAcc += fz;
      if (newton3) {
        jBuf.forceX[j] -= fx;
        jBuf.forceY[j] -= fy;
        jBuf.forceZ[j] -= fz;
      }
    }
    iBuf.forceX[i] += fxAcc;
    iBuf.forceY[i] += fyAcc;
    iBuf.forceZ[i] += fzAcc;
  }
}

namespace {

/**
 * Algorithm: for every block of a i-particles, fill the i registers once, then
 * for every block of b j-particles fill the j registers, evaluate V pairs, apply
 * newton3 to j and accumulate the i contribution; store the accumulator after
 * the inner loop.
 */
template <std::size_t V, PatternKind P>
class VectorKernel {
  using Reg = simd::Lanes<V>;
  static constexpr std::size_t half = V / 2;
  static constexpr std::size_t numI = P == PatternKind::oneByV    ? 1
                                      : P == PatternKind::twoByHalf ? 2
                                      : P == PatternKind::vByOne    ? V
                                                                    : half;
  static constexpr std::size_t numJ = V / numI;

  /// i and j offsets of each lane relative to the current blocks.
  static constexpr std::size_t iOffset(std::size_t lane) {
    switch (P) {
      case PatternKind::oneByV:
        return 0;
      case PatternKind::vByOne:
        return lane;
      case PatternKind::twoByHalf:
        return lane / half;
      case PatternKind::halfByTwo:
        return lane % half;
    }
    return 0;
  }
  static constexpr std::size_t jOffset(std::size_t lane) {
    switch (P) {
      case PatternKind::oneByV:
        return lane;
      case PatternKind::vByOne:
        return 0;
      case PatternKind::twoByHalf:
        return lane % half;
      case PatternKind::halfByTwo:
        return lane / half;
    }
    return 0;
  }

  /// Broadcast of one entry.
  static Reg fillOne(const double *values, std::size_t start, std::size_t) { return Reg::broadcast(values[start]); }
  /// Entries start and start+1, one per register half.
  static Reg fillTwoHalves(const double *values, std::size_t start, std::size_t n) {
    return Reg::broadcastHalves(values[start], n - start > 1 ? values[start + 1] : 0.);
  }
  /// V consecutive entries.
  static Reg fillFull(const double *values, std::size_t start, std::size_t n) {
    return Reg::loadN(values + start, n - start);
  }
  /// V/2 consecutive entries, duplicated into both halves.
  static Reg fillHalfDuplicated(const double *values, std::size_t start, std::size_t n) {
    return Reg::loadHalfDuplicated(values + start, n - start);
  }

  static Reg fillI(const double *values, std::size_t start, std::size_t n) {
    if constexpr (P == PatternKind::oneByV) return fillOne(values, start, n);
    if constexpr (P == PatternKind::twoByHalf) return fillTwoHalves(values, start, n);
    if constexpr (P == PatternKind::vByOne) return fillFull(values, start, n);
    if constexpr (P == PatternKind::halfByTwo) return fillHalfDuplicated(values, start, n);
  }
  static Reg fillJ(const double *values, std::size_t start, std::size_t n) {
    if constexpr (P == PatternKind::oneByV) return fillFull(values, start, n);
    if constexpr (P == PatternKind::twoByHalf) return fillHalfDuplicated(values, start, n);
    if constexpr (P == PatternKind::vByOne) return fillOne(values, start, n);
    if constexpr (P == PatternKind::halfByTwo) return fillTwoHalves(values, start, n);
  }

  /// Adds the accumulated i forces; the layout decides which reduction applies.
  static void storeI(const Reg &acc, double *forces, std::size_t start, std::size_t n) {
    const std::size_t available = n - start;
    if constexpr (P == PatternKind::oneByV) {
      forces[start] += acc.reduceSum();
    } else if constexpr (P == PatternKind::twoByHalf) {
      forces[start] += acc.reduceLowerHalf();
      if (available > 1) forces[start + 1] += acc.reduceUpperHalf();
    } else if constexpr (P == PatternKind::vByOne) {
      acc.storeAddN(forces + start, available);
    } else {
      const auto folded = acc.foldHalves();
      const auto m = std::min(available, half);
      for (std::size_t l = 0; l < m; ++l) forces[start + l] += folded[l];
    }
  }

  /// Newton3 update of the j forces, mirroring the i store of the transposed pattern.
  static void subtractJ(const Reg &f, double *forces, std::size_t start, std::size_t n) {
    const std::size_t available = n - start;
    if constexpr (P == PatternKind::oneByV) {
      f.storeSubN(forces + start, available);
    } else if constexpr (P == PatternKind::twoByHalf) {
      const auto folded = f.foldHalves();
      const auto m = std::min(available, half);
      for (std::size_t l = 0; l < m; ++l) forces[start + l] -= folded[l];
    } else if constexpr (P == PatternKind::vByOne) {
      forces[start] -= f.reduceSum();
    } else {
      forces[start] -= f.reduceLowerHalf();
      if (available > 1) forces[start + 1] -= f.reduceUpperHalf();
    }
  }

 public:
  static void run(ParticleBuffer &iBuf, ParticleBuffer &jBuf, const LJConstants &c, bool newton3, bool sameBuffer,
                  KernelStats &stats) {
    const std::size_t ni = iBuf.size();
    const std::size_t nj = jBuf.size();
    if (ni == 0 or nj == 0) return;

    for (std::size_t i0 = 0; i0 < ni; i0 += numI) {
      const Reg xi = fillI(iBuf.posX.data(), i0, ni);
      const Reg yi = fillI(iBuf.posY.data(), i0, ni);
      const Reg zi = fillI(iBuf.posZ.data(), i0, ni);

      // lanes whose i entry exists and is not padding
      Reg iValid;
      for (std::size_t l = 0; l < V; ++l) {
        const auto i = i0 + iOffset(l);
        iValid.v[l] = i < ni and iBuf.ownership[i] != Ownership::dummy ? 1. : 0.;
      }

      Reg accX, accY, accZ;
      for (std::size_t j0 = 0; j0 < nj; j0 += numJ) {
        const Reg xj = fillJ(jBuf.posX.data(), j0, nj);
        const Reg yj = fillJ(jBuf.posY.data(), j0, nj);
        const Reg zj = fillJ(jBuf.posZ.data(), j0, nj);

        Reg valid;
        for (std::size_t l = 0; l < V; ++l) {
          const auto i = i0 + iOffset(l);
          const auto j = j0 + jOffset(l);
          const bool real = iValid.v[l] != 0. and j < nj and jBuf.ownership[j] != Ownership::dummy and
                            not excludedSelfPair(sameBuffer, newton3, i, j);
          valid.v[l] = real ? 1. : 0.;
        }

        const Reg dx = xi - xj;
        const Reg dy = yi - yj;
        const Reg dz = zi - zj;
        const Reg r2 = dx * dx + dy * dy + dz * dz;

        const Reg mask = valid * lessThan(r2, c.cutoff2);
        const std::size_t useful = valid.countNonZero();
        for (std::size_t l = 0; l < V; ++l) {
          if (valid.v[l] != 0. and r2.v[l] == 0.) {
            overlapping(iBuf.id[i0 + iOffset(l)], jBuf.id[j0 + jOffset(l)]);
          }
        }

        // masked lanes get a harmless distance before the division
        const Reg invr2 = 1. / blend(mask, r2, 1.);
        const Reg lj6 = invr2 * invr2 * invr2 * c.sigma6;
        const Reg lj12 = lj6 * lj6;
        const Reg fac = (lj12 + lj12 - lj6) * invr2 * c.epsilon24 * mask;

        const Reg fx = dx * fac;
        const Reg fy = dy * fac;
        const Reg fz = dz * fac;

        if (newton3) {
          subtractJ(fx, jBuf.forceX.data(), j0, nj);
          subtractJ(fy, jBuf.forceY.data(), j0, nj);
          subtractJ(fz, jBuf.forceZ.data(), j0, nj);
        }
        accX += fx;
        accY += fy;
        accZ += fz;

        ++stats.kernelInvocations;
        stats.laneSlots += V;
        stats.usefulInteractions += useful;
        stats.blankLanes += V - useful;
        stats.pairInteractions += mask.countNonZero();
      }

      storeI(accX, iBuf.forceX.data(), i0, ni);
      storeI(accY, iBuf.forceY.data(), i0, ni);
      storeI(accZ, iBuf.forceZ.data(), i0, ni);
    }
  }
};

template <std::size_t V>
void dispatchPattern(ParticleBuffer &iBuf, ParticleBuffer &jBuf, const LJConstants &c, bool newton3, bool sameBuffer,
                     PatternKind pattern, KernelStats &stats) {
  switch (pattern) {
    case PatternKind::oneByV:
      VectorKernel<V, PatternKind::oneByV>::run(iBuf, jBuf, c, newton3, sameBuffer, stats);
      return;
    case PatternKind::vByOne:
      VectorKernel<V, PatternKind::vByOne>::run(iBuf, jBuf, c, newton3, sameBuffer, stats);
      return;
    case PatternKind::twoByHalf:
      VectorKernel<V, PatternKind::twoByHalf>::run(iBuf, jBuf, c, newton3, sameBuffer, stats);
      return;
    case PatternKind::halfByTwo:
      VectorKernel<V, PatternKind::halfByTwo>::run(iBuf, jBuf, c, newton3, sameBuffer, stats);
      return;
  }
}

}  // namespace

void computePairVectorized(ParticleBuffer &iBuf, ParticleBuffer &jBuf, const LJParams &params, bool newton3,
                           bool sameBuffer, PatternKind pattern, std::size_t vectorWidth, KernelStats &stats) {
  const LJConstants c(params);
  switch (vectorWidth) {
    case 4:
      dispatchPattern<4>(iBuf, jBuf, c, newton3, sameBuffer, pattern, stats);
      return;
    case 8:
      dispatchPattern<8>(iBuf, jBuf, c, newton3, sameBuffer, pattern, stats);
      return;
    case 16:
      dispatchPattern<16>(iBuf, jBuf, c, newton3, sameBuffer, pattern, stats);
      return;
    case 32:
      dispatchPattern<32>(iBuf, jBuf, c, newton3, sameBuffer, pattern, stats);
      return;
    default:
      checkVectorWidth(vectorWidth);
  }
}

PairKernel::PairKernel(const LJParams &params, bool newton3, std::size_t vectorWidth, PatternKind pattern)
    : _params(params), _newton3(newton3), _vectorized(true), _vectorWidth(vectorWidth), _pattern(pattern) {
  checkVectorWidth(vectorWidth);
}

PairKernel::PairKernel(const LJParams &params, bool newton3) : _params(params), _newton3(newton3), _vectorized(false) {}

void PairKernel::operator()(ParticleBuffer &iBuffer, ParticleBuffer &jBuffer, bool sameBuffer) {
  if (_vectorized) {
    computePairVectorized(iBuffer, jBuffer, _params, _newton3, sameBuffer, _pattern, _vectorWidth, _stats);
  } else {
    computePairScalar(iBuffer, jBuffer, _params, _newton3, sameBuffer, _stats);
  }
}

}  // namespace lanemd
