#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lesgp/lattice.hpp"
#include "lesgp/le_semigroup.hpp"

namespace lesgp {

/// Isomorphism-invariant encoding of a structure: (n, leq, mul) written in a
/// canonical labeling. Equal keys iff the structures are isomorphic via a
/// bijection preserving both the order and the multiplication.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

  [[nodiscard]] const std::vector<std::uint8_t>& bytes() const noexcept { return bytes_; }

  /// 16 hex digits of the 64-bit FNV-1a hash of bytes().
  [[nodiscard]] std::string hash_hex() const;

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::vector<std::uint8_t> bytes_;
};

[[nodiscard]] CanonicalKey canonical_key(const LeSemigroup& s);
[[nodiscard]] CanonicalKey canonical_key(const FiniteLattice& lattice);

/// perm[x] = canonical label of x. Canonical labelings are linear extensions
/// of the order, so bottom maps to 0 and top to n-1.
[[nodiscard]] std::vector<std::size_t> canonical_labeling(const LeSemigroup& s);
[[nodiscard]] std::vector<std::size_t> canonical_labeling(const FiniteLattice& lattice);

enum class Dedupe { labeled, canonical };

struct EnumerationTask {
  std::size_t n = 1;
  Dedupe dedupe = Dedupe::canonical;
  std::vector<std::string> require;  // property names, see property_vocabulary()
  std::vector<std::string> forbid;
  std::optional<std::size_t> limit;
};

struct EnumerationOptions {
  std::size_t jobs = 1;
  // Number of leading table cells fixed per work unit; 0 picks one row.
  std::size_t split_depth = 0;
};

/// One lattice per isomorphism class, each labeled canonically (a linear
/// extension), ordered by descending canonical key so chains come first.
/// Throws Error(OrderTooLarge) beyond max_enumeration_order().
[[nodiscard]] std::vector<FiniteLattice> enumerate_lattices(std::size_t n);

/// All le-semigroups of order task.n satisfying the task's constraints, for
/// each lattice of enumerate_lattices(n) in turn, tables in lexicographic
/// row-major order. Canonical dedupe keeps the first member of each
/// isomorphism class. The output does not depend on options.jobs.
[[nodiscard]] std::vector<LeSemigroup> enumerate_le_semigroups(
    const EnumerationTask& task, const EnumerationOptions& options = {});

/// Same as enumerate_le_semigroups; additionally rejects tasks whose
/// constraint names are unknown (UnknownConstraint) or contradictory.
[[nodiscard]] std::vector<LeSemigroup> hunt(const EnumerationTask& task,
                                            const EnumerationOptions& options = {});

/// Names accepted in EnumerationTask::require / forbid.
[[nodiscard]] std::span<const std::string_view> property_vocabulary() noexcept;

/// Throws Error(UnknownConstraint) for names outside the vocabulary.
[[nodiscard]] bool evaluate_property(const LeSemigroup& s, std::string_view name);

}  // namespace lesgp
