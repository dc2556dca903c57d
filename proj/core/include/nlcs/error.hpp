#pragma once

#include <stdexcept>
#include <string>

namespace nlcs {

/// Error thrown by every failing operation in the library. `kind` is a
/// stable machine-readable tag; the CLI maps it onto exit codes and JSON
/// error objects.
///
/// Kinds in use: invalid-dimension, dimension-mismatch, parameter, domain,
/// evaluation, truncation, non-invertible, unsupported-label, overflow.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void raise(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

}  // namespace nlcs
