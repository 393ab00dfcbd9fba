#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace linkage_kit {

enum class ErrorKind {
  InvalidCartan,
  RankMismatch,
  IndexOutOfRange,
  GroupTooLarge,
  ContextMismatch,
  NotIntegral,
  NotParabolicDominant,
  OrbitGuardExceeded,
  InvalidRational,
  InvalidJob,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above; the CLI
// maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace linkage_kit
