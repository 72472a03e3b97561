#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symdual {

enum class ErrorKind {
  AmbientSizeExceeded,
  MalformedMatrix,
  WidthTooSmall,
  WidthMismatch,
  TotalMismatch,
  InstanceTooLarge,
  DimensionExceeded,
  BoxTooLarge,
  InsufficientSamples,
  NoStableWindow,
  CapExceeded,
  SchemaViolation,
  InternalInvariant,
};

std::string_view error_code(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_code(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Enumeration caps, passed explicitly to the operations that need them.
struct Limits {
  int tuple_max_c = 4;        // operations quantifying over s-tuples of order ideals
  int enumeration_max_c = 6;  // single order-ideal sweeps
  long long tuple_budget = 200'000'000;  // product of per-generator ideal counts
};

}  // namespace symdual
