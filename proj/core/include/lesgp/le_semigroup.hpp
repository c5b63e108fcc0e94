#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lesgp/element.hpp"
#include "lesgp/lattice.hpp"

namespace lesgp {

using MultiplicationTable = IndexMatrix;

/// A finite lattice-ordered semigroup with a greatest element whose
/// multiplication is associative and distributes over binary joins on both
/// sides. Immutable once built.
class LeSemigroup {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return lattice_.size(); }
  [[nodiscard]] auto elements() const { return carrier(size()); }

  [[nodiscard]] const FiniteLattice& lattice() const noexcept { return lattice_; }
  [[nodiscard]] const MultiplicationTable& table() const noexcept { return mul_; }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept {
    return names_;
  }

  [[nodiscard]] ElementId operator()(ElementId x, ElementId y) const {
    return mul_(x.index(), y.index());
  }
  [[nodiscard]] ElementId operator()(ElementId x, ElementId y, ElementId z) const {
    return (*this)((*this)(x, y), z);
  }

  [[nodiscard]] bool leq(ElementId x, ElementId y) const { return lattice_.leq(x, y); }
  [[nodiscard]] ElementId meet(ElementId x, ElementId y) const {
    return lattice_.meet(x, y);
  }
  [[nodiscard]] ElementId join(ElementId x, ElementId y) const {
    return lattice_.join(x, y);
  }
  [[nodiscard]] ElementId top() const noexcept { return lattice_.top(); }
  [[nodiscard]] ElementId bottom() const noexcept { return lattice_.bottom(); }

  /// Label of x: its name when names were supplied, else its index.
  [[nodiscard]] std::string label(ElementId x) const;

  bool operator==(const LeSemigroup& other) const {
    return lattice_ == other.lattice_ && mul_ == other.mul_;
  }

 private:
  friend LeSemigroup build_le_semigroup(FiniteLattice lattice,
                                        const MultiplicationTable& mul,
                                        std::vector<std::string> names);

  FiniteLattice lattice_;
  MultiplicationTable mul_;
  std::vector<std::string> names_;
};

/// Checks entries are in range, then associativity, order compatibility and
/// two-sided distributivity over joins, reporting the lexicographically first
/// failing tuple of the first failing axiom.
///
/// Witnesses: NotAssociative (x, y, z); NotCompatible (a, b, x) with a <= b;
/// NotDistributive (x, y, z) plus side(). IndexOutOfRange (row, column).
[[nodiscard]] LeSemigroup build_le_semigroup(FiniteLattice lattice,
                                             const MultiplicationTable& mul,
                                             std::vector<std::string> names = {});

[[nodiscard]] inline ElementId product(const LeSemigroup& s, ElementId x,
                                       ElementId y) {
  return s(x, y);
}

/// Renames every element x to perm[x]. The result is revalidated.
[[nodiscard]] LeSemigroup relabel(const LeSemigroup& s,
                                  std::span<const std::size_t> perm);

}  // namespace lesgp
