#pragma once

#include <stdexcept>
#include <string>

namespace rodring {

// Raised when an internal cross-check fails: a Burnside sum that does not
// divide by the group order, a canonical-partition count that disagrees with
// the fixed-point average, and the like. These are never input errors — if
// one fires, the library itself is wrong.
struct ConsistencyError : std::logic_error {
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace rodring
