/**
 * @file KernelStats.h
 */

#pragma once

#include <cstdint>

namespace lanemd {

/**
 * Lane accounting of the pair kernels.
 *
 * A lane slot is one lane of one kernel invocation. It is useful when it holds
 * a real pair (both entries in range, neither a dummy, not excluded as a self
 * pair) and blank otherwise. pairInteractions counts useful lanes that also
 * pass the cutoff.
 */
struct KernelStats {
  std::uint64_t laneSlots{0};
  std::uint64_t usefulInteractions{0};
  std::uint64_t blankLanes{0};
  std::uint64_t kernelInvocations{0};
  std::uint64_t pairInteractions{0};

  KernelStats &operator+=(const KernelStats &o) {
    laneSlots += o.laneSlots;
    usefulInteractions += o.usefulInteractions;
    blankLanes += o.blankLanes;
    kernelInvocations += o.kernelInvocations;
    pairInteractions += o.pairInteractions;
    return *this;
  }
  bool operator==(const KernelStats &) const = default;
};

}  // namespace lanemd
