#pragma once

#include <stdexcept>
#include <string>

namespace hgm {

/// Raised when a computation would exceed its configured work budget.
class CostGuardExceeded : public std::runtime_error {
 public:
  explicit CostGuardExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hgm
