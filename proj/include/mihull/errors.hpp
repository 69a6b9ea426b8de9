#pragma once

#include <stdexcept>
#include <string>

namespace mihull {

enum class Errc {
  DivisionByZero,
  SingularMatrix,
  EmptyList,
  NonIntegralInput,
  ZeroRay,
  EmptyPolyhedron,
  ImplicitLineality,
  EmptyInput,
  DimensionMismatch,
  EmptyGenerators,
  PNotInCandidates,
  TooFewPoints,
  UnboundedInput,
  MixedInfeasible,
  FiberEmpty,
  NonPolytopeInput,
  BadDimension,
  Parse,
};

/// Single exception type for all library errors; `code()` tells them apart
/// (the CLI maps codes to exit statuses).
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, int line, int col)
      : std::runtime_error(std::move(message)), code_(code), line_(line), col_(col) {}

  Errc code() const { return code_; }
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  Errc code_;
  int line_ = -1;
  int col_ = -1;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mihull
