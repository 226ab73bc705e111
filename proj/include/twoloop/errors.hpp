#pragma once

#include <stdexcept>
#include <string>

namespace twoloop {

/// An internal invariant of a chain complex failed (for example d1 * d2 != 0,
/// or a computed element fell outside the space it must lie in).
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace twoloop
