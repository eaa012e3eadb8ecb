#pragma once

#include <stdexcept>
#include <string>

namespace avgproc {

// Caller supplied an argument outside the documented domain.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested operation is not available for this input (unsupported graph
// family, size cap exceeded without a closed form, ...).
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A numerical procedure failed to reach its stated tolerance.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ParameterError(message);
}

}  // namespace avgproc
