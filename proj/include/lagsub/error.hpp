#pragma once

#include <stdexcept>
#include <string>

namespace lagsub {

enum class ErrorKind {
  InvalidContext,
  MixedContexts,
  DivisionByZero,
  UnsupportedContext,
  AmbientMismatch,
  DimMismatch,
  NotSymmetric,
  DegenerateForm,
  DegenerateRestriction,
  IsotropicSearchExhausted,
  ZeroScalar,
  NotSplit,
  NotLagrangian,
  OddAmbient,
  NonSplitExtension,
  CapExceeded,
  OutOfRange,
  Undefined,
  Parse,
};

const char* to_string(ErrorKind kind) noexcept;

// Every domain failure in the library is reported through this type; the
// kind mirrors the named error of the failing operation.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lagsub
