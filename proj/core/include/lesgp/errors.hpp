#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lesgp {

enum class ErrorKind {
  NotPartialOrder,
  NotLattice,
  NotAssociative,
  NotDistributive,
  NotCompatible,
  IndexOutOfRange,
  DimensionMismatch,
  ParseError,
  OrderTooLarge,
  NotIdealElement,
  UnknownTheorem,
  UnknownConstraint,
  InvalidTask,
};

[[nodiscard]] std::string_view to_string(ErrorKind kind) noexcept;

/// Which side of a product an axiom failure was observed on.
enum class Side { left, right };

/// Base error for everything the library rejects. `witness()` holds the
/// element indices that demonstrate the failure, in the order named by the
/// message (for example the triple (x, y, z) of a failing associativity law).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::size_t> witness = {},
        std::optional<Side> side = std::nullopt);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::span<const std::size_t> witness() const noexcept {
    return witness_;
  }
  [[nodiscard]] std::optional<Side> side() const noexcept { return side_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
  std::optional<Side> side_;
};

/// Raised by the structure-file reader; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, const std::string& message, std::size_t line,
             std::size_t column);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace lesgp
