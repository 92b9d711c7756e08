#include "harbourne/error.hpp"

namespace harbourne {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotOrdinary: return "NotOrdinary";
    case ErrorKind::WrongSurface: return "WrongSurface";
    case ErrorKind::NotElliptic: return "NotElliptic";
    case ErrorKind::NoSingularities: return "NoSingularities";
    case ErrorKind::EmptyPointSet: return "EmptyPointSet";
    case ErrorKind::BadMultiplicity: return "BadMultiplicity";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::BadOrder: return "BadOrder";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownCatalogName: return "UnknownCatalogName";
  }
  return "Unknown";
}

}  // namespace harbourne
