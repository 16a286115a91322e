#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mstv {

enum class ErrorKind {
  ParseError,
  SelfLoop,
  Disconnected,
  InvalidWeight,
  NotInGraph,
  NotSpanning,
  IndexOutOfRange,
  SameVertex,
  KZero,
  InvalidWitness,
  ParallelEdge,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a diagnostic without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mstv
