#pragma once

#include <stdexcept>
#include <string>

namespace lcmquad {

enum class ErrorKind {
  InvalidPolynomial,
  NotIrreducible,
  NotReducible,
  InvalidArgument,
  LimitTooLarge,
  Overflow,
  OracleRangeExceeded,
  DegenerateFactors,
  DomainError,
  ZeroL,
  EmptyInput,
};

const char* to_string(ErrorKind kind) noexcept;

// Domain failure raised by every module. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lcmquad
