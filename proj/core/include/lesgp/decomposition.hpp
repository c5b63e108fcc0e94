#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lesgp/element.hpp"
#include "lesgp/le_semigroup.hpp"

namespace lesgp {

/// Every checkable statement, in the fixed evaluation order used by check_all.
enum class TheoremId {
  t_least,  // t(x) is the least ideal element above x
  kp,       // each J-class holds exactly one ideal element, t(a)
  t_idemp,  // Green condition <=> representative is idempotent
  lp,       // subsemigroup class: t x t = t = e x e, t x e = t = e x t, t e = t = e t
  ir,       // regular and intra-regular => the lp equalities for every x
  gc,       // class is a subgroup <=> single idempotent
  idp,      // Lambda, e idempotent ideal => relative top class of ]e] is closed
  main,     // Lambda => every Green class is a subsemigroup
  sd_fwd,   // semisimple and Lambda => semilattice decomposition into J-classes
  sd_bwd,   // semilattice decomposition into J-classes => semisimple and Lambda
  equiv,    // semisimple and Lambda => intra-regular; intra-regular => semisimple
  ext9,     // semisimple => ideal elements form a semilattice under *
  ext13,    // all ideal elements semiprime => intra-regular
};

[[nodiscard]] std::span<const TheoremId> all_theorems() noexcept;

/// Stable CLI/report name, e.g. "main", "sd-fwd".
[[nodiscard]] std::string_view to_string(TheoremId id) noexcept;

/// Inverse of to_string; throws Error(UnknownTheorem).
[[nodiscard]] TheoremId parse_theorem_id(std::string_view name);

enum class Status { verified, vacuous, violation };

[[nodiscard]] std::string_view to_string(Status status) noexcept;

/// One counter-example tuple; `claim` names the sub-statement that failed.
struct Witness {
  std::string claim;
  std::vector<ElementId> elements;

  bool operator==(const Witness&) const = default;
};

struct TheoremReport {
  TheoremId id = TheoremId::t_least;
  bool hypothesis_holds = false;
  std::optional<bool> conclusion_holds;  // empty when the hypothesis fails
  Status status = Status::vacuous;
  std::vector<Witness> witnesses;
};

/// A J-class viewed as a join-semilattice substructure with top = its
/// representative. The four predicates are evaluated inside the class and are
/// empty when the class is not closed under * and v.
struct ClassRecord {
  ElementId representative;
  ElementSet members;
  bool subsemigroup = false;
  bool join_closed = false;
  std::optional<bool> left_simple;
  std::optional<bool> semisimple;
  std::optional<bool> intra_regular;
  std::optional<bool> lambda;

  [[nodiscard]] bool applicable() const noexcept { return subsemigroup && join_closed; }
};

/// x in J_alpha, y in J_beta with t(xy) != alpha * beta.
struct ContainmentWitness {
  ElementId x;
  ElementId y;
  ElementId alpha;
  ElementId beta;
  ElementId closure_of_product;
};

struct DecompositionReport {
  ElementSet semilattice_elements;  // representatives, ascending
  std::vector<ClassRecord> classes;  // same order as j_classes()
  bool disjoint = false;
  bool cover = false;
  // Representatives are closed under *, commute and are idempotent.
  bool index_semilattice = false;
  std::optional<std::pair<ElementId, ElementId>> index_witness;
  bool class_product_containment = false;
  std::optional<ContainmentWitness> containment_witness;

  /// True iff the J-classes form a semilattice of left simple, semisimple,
  /// intra-regular join-semilattice substructures satisfying Lambda.
  [[nodiscard]] bool passes() const;
};

[[nodiscard]] DecompositionReport check_decomposition(const LeSemigroup& s);

[[nodiscard]] TheoremReport check_theorem(const LeSemigroup& s, TheoremId id);

/// Reports for every id in all_theorems() order.
[[nodiscard]] std::vector<TheoremReport> check_all(const LeSemigroup& s);

[[nodiscard]] bool violation_free(std::span<const TheoremReport> reports);

}  // namespace lesgp
