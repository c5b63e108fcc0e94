#include "lesgp/errors.hpp"

#include <utility>

namespace lesgp {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPartialOrder: return "NotPartialOrder";
    case ErrorKind::NotLattice: return "NotLattice";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::NotIdealElement: return "NotIdealElement";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::UnknownConstraint: return "UnknownConstraint";
    case ErrorKind::InvalidTask: return "InvalidTask";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::vector<std::size_t> witness, std::optional<Side> side)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      witness_(std::move(witness)),
      side_(side) {}

ParseError::ParseError(ErrorKind kind, const std::string& message,
                       std::size_t line, std::size_t column)
    : Error(kind, "line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

}  // namespace lesgp
