#pragma once

#include <stdexcept>
#include <string>

namespace mediator {

inline constexpr const char* kToolVersion = "0.1.0";

// Unrecoverable data or usage error. The CLI maps it to exit code 1.
// Structural data problems found during validation are reported as
// model::Violation values instead, not thrown.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace mediator
