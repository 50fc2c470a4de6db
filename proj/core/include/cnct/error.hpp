#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cnct {

enum class ErrorKind {
  InvalidGround,
  OutOfRange,
  NotClosed,
  NotOverlapping,
  NotGlobal,
  GroundMismatch,
  EmptySubset,
  TooSmall,
  TooLarge,
  ProbSumNotOne,
  LengthMismatch,
  NegativeProbability,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so callers (and the
// CLI diagnostics) can name the violated rule without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cnct
