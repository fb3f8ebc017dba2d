#pragma once

#include <stdexcept>

namespace severi {

// A computed or stored value contradicts an earlier one. Always a defect,
// never recoverable; callers must not mask it.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cache file failed to parse or violates the format invariants.
struct CacheCorruption : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace severi
