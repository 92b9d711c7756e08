#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harbourne {

enum class ErrorKind {
  NotOrdinary,
  WrongSurface,
  NotElliptic,
  NoSingularities,
  EmptyPointSet,
  BadMultiplicity,
  BadInput,
  BadOrder,
  BadParameter,
  ParseError,
  ValidationError,
  UnknownCatalogName,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace harbourne
