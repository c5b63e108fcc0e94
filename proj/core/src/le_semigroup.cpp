#include "lesgp/le_semigroup.hpp"

#include <string>

#include "lesgp/errors.hpp"

namespace lesgp {
namespace {

std::string tuple_text(std::initializer_list<std::size_t> xs) {
  std::string out = "(";
  bool first = true;
  for (auto x : xs) {
    if (!first) out += ", ";
    out += std::to_string(x);
    first = false;
  }
  return out + ")";
}

void check_indices(const MultiplicationTable& mul, std::size_t n) {
  if (mul.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "multiplication table is " + std::to_string(mul.dim()) + "x" +
                    std::to_string(mul.dim()) + " but the lattice has " +
                    std::to_string(n) + " elements");
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(x, y).index() >= n) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "product at " + tuple_text({x, y}) + " is out of range", {x, y});
      }
    }
  }
}

void check_associative(const MultiplicationTable& mul, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = mul(x, y).index();
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(xy, z) != mul(x, mul(y, z).index())) {
          throw Error(ErrorKind::NotAssociative,
                      "(xy)z != x(yz) at " + tuple_text({x, y, z}), {x, y, z});
        }
      }
    }
  }
}

void check_compatible(const FiniteLattice& lat, const MultiplicationTable& mul) {
  const std::size_t n = lat.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!lat.leq(ElementId{a}, ElementId{b})) continue;
      for (std::size_t x = 0; x < n; ++x) {
        if (!lat.leq(mul(x, a), mul(x, b))) {
          throw Error(ErrorKind::NotCompatible,
                      "a <= b but xa > xb at (a, b, x) = " + tuple_text({a, b, x}),
                      {a, b, x}, Side::left);
        }
        if (!lat.leq(mul(a, x), mul(b, x))) {
          throw Error(ErrorKind::NotCompatible,
                      "a <= b but ax > bx at (a, b, x) = " + tuple_text({a, b, x}),
                      {a, b, x}, Side::right);
        }
      }
    }
  }
}

void check_distributive(const FiniteLattice& lat, const MultiplicationTable& mul) {
  const std::size_t n = lat.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::size_t yz = lat.join(ElementId{y}, ElementId{z}).index();
        if (mul(x, yz) != lat.join(mul(x, y), mul(x, z))) {
          throw Error(ErrorKind::NotDistributive,
                      "x(y v z) != xy v xz at " + tuple_text({x, y, z}),
                      {x, y, z}, Side::left);
        }
        if (mul(yz, x) != lat.join(mul(y, x), mul(z, x))) {
          throw Error(ErrorKind::NotDistributive,
                      "(y v z)x != yx v zx at " + tuple_text({x, y, z}),
                      {x, y, z}, Side::right);
        }
      }
    }
  }
}

}  // namespace

std::string LeSemigroup::label(ElementId x) const {
  if (x.index() < names_.size()) return names_[x.index()];
  return std::to_string(x.index());
}

LeSemigroup build_le_semigroup(FiniteLattice lattice, const MultiplicationTable& mul,
                               std::vector<std::string> names) {
  const std::size_t n = lattice.size();
  if (!names.empty() && names.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                std::to_string(names.size()) + " names for " + std::to_string(n) +
                    " elements");
  }
  check_indices(mul, n);
  check_associative(mul, n);
  check_compatible(lattice, mul);
  check_distributive(lattice, mul);

  LeSemigroup s;
  s.lattice_ = std::move(lattice);
  s.mul_ = mul;
  s.names_ = std::move(names);
  return s;
}

LeSemigroup relabel(const LeSemigroup& s, std::span<const std::size_t> perm) {
  const std::size_t n = s.size();
  if (perm.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "permutation has the wrong length");
  }
  std::vector<bool> seen(n, false);
  for (auto p : perm) {
    if (p >= n || seen[p]) {
      throw Error(ErrorKind::IndexOutOfRange, "not a permutation of the carrier");
    }
    seen[p] = true;
  }
  BoolMatrix leq(n);
  MultiplicationTable mul(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      leq(perm[x], perm[y]) = s.lattice().order()(x, y);
      mul(perm[x], perm[y]) = ElementId{perm[s.table()(x, y).index()]};
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    names.resize(n);
    for (std::size_t x = 0; x < n; ++x) names[perm[x]] = s.names()[x];
  }
  return build_le_semigroup(build_lattice(leq), mul, std::move(names));
}

}  // namespace lesgp
