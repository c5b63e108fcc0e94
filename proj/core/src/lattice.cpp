#include "lesgp/lattice.hpp"

#include <optional>
#include <string>

#include "lesgp/config.hpp"
#include "lesgp/errors.hpp"

namespace lesgp {
namespace {

std::string pair_text(std::size_t x, std::size_t y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

void check_partial_order(const BoolMatrix& leq) {
  const std::size_t n = leq.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (leq(x, y) > 1) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "order entry at " + pair_text(x, y) + " is not 0/1", {x, y});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq(x, x)) {
      throw Error(ErrorKind::NotPartialOrder,
                  "not reflexive at " + std::to_string(x), {x});
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (leq(x, y) && leq(y, x)) {
        throw Error(ErrorKind::NotPartialOrder,
                    "not antisymmetric at " + pair_text(x, y), {x, y});
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!leq(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        if (leq(y, z) && !leq(x, z)) {
          throw Error(ErrorKind::NotPartialOrder,
                      "not transitive at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ", " + std::to_string(z) + ")",
                      {x, y, z});
        }
      }
    }
  }
}

// Element c with in_set(c) that dominates every d with in_set(d) under
// `above(d, c)`; this is the glb or lub depending on the orientation passed.
template <class InSet, class Above>
std::optional<std::size_t> extremum(std::size_t n, InSet in_set, Above above) {
  for (std::size_t c = 0; c < n; ++c) {
    if (!in_set(c)) continue;
    bool dominates = true;
    for (std::size_t d = 0; d < n && dominates; ++d) {
      if (in_set(d) && !above(d, c)) dominates = false;
    }
    if (dominates) return c;
  }
  return std::nullopt;
}

}  // namespace

FiniteLattice build_lattice(const BoolMatrix& leq) {
  const std::size_t n = leq.dim();
  if (n == 0) {
    throw Error(ErrorKind::DimensionMismatch, "a lattice needs at least one element");
  }
  if (n > max_order()) {
    throw Error(ErrorKind::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds the cap of " +
                    std::to_string(max_order()));
  }
  check_partial_order(leq);

  FiniteLattice lattice;
  lattice.order_ = leq;
  lattice.meet_ = IndexMatrix(n);
  lattice.join_ = IndexMatrix(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      auto glb = extremum(
          n, [&](std::size_t c) { return leq(c, x) && leq(c, y); },
          [&](std::size_t d, std::size_t c) { return leq(d, c) != 0; });
      if (!glb) {
        throw Error(ErrorKind::NotLattice, "no meet for " + pair_text(x, y), {x, y});
      }
      auto lub = extremum(
          n, [&](std::size_t c) { return leq(x, c) && leq(y, c); },
          [&](std::size_t d, std::size_t c) { return leq(c, d) != 0; });
      if (!lub) {
        throw Error(ErrorKind::NotLattice, "no join for " + pair_text(x, y), {x, y});
      }
      lattice.meet_(x, y) = lattice.meet_(y, x) = ElementId{*glb};
      lattice.join_(x, y) = lattice.join_(y, x) = ElementId{*lub};
    }
  }

  ElementId top{0};
  ElementId bottom{0};
  for (std::size_t x = 1; x < n; ++x) {
    top = lattice.join_(top.index(), x);
    bottom = lattice.meet_(bottom.index(), x);
  }
  lattice.top_ = top;
  lattice.bottom_ = bottom;
  return lattice;
}

}  // namespace lesgp
