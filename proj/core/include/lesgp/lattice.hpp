#pragma once

#include <cstddef>

#include "lesgp/element.hpp"

namespace lesgp {

/// A finite lattice with precomputed meet and join tables.
///
/// Only constructible through build_lattice(), so every instance satisfies:
/// `order` is a partial order, meet/join are the glb/lub of each pair, and
/// top/bottom are the unique maximum/minimum.
class FiniteLattice {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return order_.dim(); }

  [[nodiscard]] bool leq(ElementId x, ElementId y) const {
    return order_(x.index(), y.index()) != 0;
  }
  [[nodiscard]] ElementId meet(ElementId x, ElementId y) const {
    return meet_(x.index(), y.index());
  }
  [[nodiscard]] ElementId join(ElementId x, ElementId y) const {
    return join_(x.index(), y.index());
  }
  [[nodiscard]] ElementId top() const noexcept { return top_; }
  [[nodiscard]] ElementId bottom() const noexcept { return bottom_; }

  [[nodiscard]] const BoolMatrix& order() const noexcept { return order_; }
  [[nodiscard]] const IndexMatrix& meet_table() const noexcept { return meet_; }
  [[nodiscard]] const IndexMatrix& join_table() const noexcept { return join_; }

  bool operator==(const FiniteLattice& other) const {
    return order_ == other.order_;
  }

 private:
  friend FiniteLattice build_lattice(const BoolMatrix& leq);

  BoolMatrix order_;
  IndexMatrix meet_;
  IndexMatrix join_;
  ElementId top_;
  ElementId bottom_;
};

/// Validates a reflexive-transitive order matrix (leq(x, y) != 0 iff x <= y)
/// and computes meets, joins, top and bottom.
///
/// Throws Error with kind NotPartialOrder (witness: the failing element, pair
/// or triple), NotLattice (witness: a pair lacking a glb or lub),
/// DimensionMismatch for an empty matrix, or OrderTooLarge.
[[nodiscard]] FiniteLattice build_lattice(const BoolMatrix& leq);

}  // namespace lesgp
