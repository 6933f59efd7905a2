#include "hgm/error.hpp"

namespace hgm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::BadDenominator: return "BadDenominator";
    case ErrorKind::ZeroT: return "ZeroT";
    case ErrorKind::BadT: return "BadT";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NotIsotypic: return "NotIsotypic";
    case ErrorKind::BadCharacteristic: return "BadCharacteristic";
    case ErrorKind::NotDivisor: return "NotDivisor";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::SnapFailure: return "SnapFailure";
    case ErrorKind::SeriesMismatch: return "SeriesMismatch";
    case ErrorKind::PoleInCoefficient: return "PoleInCoefficient";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hgm
