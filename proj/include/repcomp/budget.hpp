#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repcomp {

// Raised when an enumeration or search would exceed its configured budget.
// `required` reports the size the caller would have to allow.
struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& what, double required_size)
      : std::runtime_error(what + " (required ~" + std::to_string(required_size) + " steps)"),
        required(required_size) {}
  double required;
};

}  // namespace repcomp
