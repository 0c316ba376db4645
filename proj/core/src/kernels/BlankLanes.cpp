#include "lanemd/kernels/LJKernel.h"

namespace lanemd {

std::uint64_t blanksExpected(PatternKind pattern, std::size_t numI, std::size_t numJ, std::size_t vectorWidth) {
  checkVectorWidth(vectorWidth);
  const auto a = iParticlesPerRegister(pattern, vectorWidth);
  const auto b = jParticlesPerRegister(pattern, vectorWidth);
  const auto blocksI = (numI + a - 1) / a;
  const auto blocksJ = (numJ + b - 1) / b;
  return static_cast<std::uint64_t>(blocksI * blocksJ * vectorWidth - numI * numJ);
}

}  // namespace lanemd
