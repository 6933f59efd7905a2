#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hgm {

enum class ErrorKind {
  NotPrime,
  TooLarge,
  ZeroElement,
  BadDenominator,
  ZeroT,
  BadT,
  Degenerate,
  NotIsotypic,
  BadCharacteristic,
  NotDivisor,
  BadPrime,
  SnapFailure,
  SeriesMismatch,
  PoleInCoefficient,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// Every precondition failure in the library surfaces as an Error carrying a
// machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace hgm
