#pragma once

#include <stdexcept>
#include <string>

namespace ospnil {

/// Raised when an input violates a mathematical precondition (invalid diagram,
/// partition outside the parametrization set, unsupported (m, N), ...).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ospnil
