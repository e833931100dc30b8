#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace steklov {

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  NonPositiveWeight,
  NonPositiveMeasure,
  IndexOutOfRange,
  EdgeNotFound,
  ParseError,
  IoError,
  NoBoundary,
  SingularInterior,
  Disconnected,
  InvalidParams,
  NotATree,
  NotUnitWeight,
  AllZero,
  HypothesisViolated,
  HypothesesNotMet,
  OutOfSupportedRange,
  NotASubgraph,
  NotBipartite,
  CertificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace steklov
