#include "lanemd/Errors.h"

namespace lanemd {

int exitCodeFor(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalidInput:
      return 1;
    case ErrorKind::diverged:
      return 2;
    case ErrorKind::io:
      return 3;
  }
  return 1;
}

}  // namespace lanemd
