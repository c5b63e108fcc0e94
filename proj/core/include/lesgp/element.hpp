#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <ranges>
#include <stdexcept>
#include <vector>

namespace lesgp {

/// Index of an element in the carrier {0, ..., n-1} of one structure.
class ElementId {
 public:
  constexpr ElementId() noexcept = default;
  constexpr explicit ElementId(std::size_t index) noexcept
      : index_(static_cast<std::uint16_t>(index)) {}

  [[nodiscard]] constexpr std::size_t index() const noexcept { return index_; }

  constexpr auto operator<=>(const ElementId&) const noexcept = default;

 private:
  std::uint16_t index_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, ElementId x) {
  return os << x.index();
}

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<ElementId>;

[[nodiscard]] inline auto carrier(std::size_t n) {
  return std::views::iota(std::size_t{0}, n) |
         std::views::transform([](std::size_t i) { return ElementId{i}; });
}

[[nodiscard]] inline ElementSet make_set(std::initializer_list<std::size_t> xs) {
  ElementSet out;
  for (auto x : xs) out.emplace_back(x);
  std::ranges::sort(out);
  auto dup = std::ranges::unique(out);
  out.erase(dup.begin(), dup.end());
  return out;
}

[[nodiscard]] inline bool contains(const ElementSet& set, ElementId x) {
  return std::ranges::binary_search(set, x);
}

/// Dense n x n matrix stored row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, T fill = T{})
      : n_(n), cells_(n * n, fill) {}

  /// Builds from nested rows; throws std::invalid_argument if not square.
  SquareMatrix(std::initializer_list<std::initializer_list<std::size_t>> rows)
      : n_(rows.size()) {
    cells_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) {
        throw std::invalid_argument("SquareMatrix: ragged initializer");
      }
      for (auto v : row) cells_.push_back(static_cast<T>(v));
    }
  }

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return cells_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return cells_[i * n_ + j];
  }

  [[nodiscard]] const std::vector<T>& cells() const noexcept { return cells_; }

  bool operator==(const SquareMatrix&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

using BoolMatrix = SquareMatrix<std::uint8_t>;
using IndexMatrix = SquareMatrix<ElementId>;

}  // namespace lesgp
