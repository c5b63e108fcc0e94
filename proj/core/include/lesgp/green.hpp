#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lesgp/element.hpp"
#include "lesgp/le_semigroup.hpp"

namespace lesgp {

using ElementPair = std::pair<ElementId, ElementId>;

/// Unit and inverses of a subset that is a group under the multiplication.
struct GroupWitness {
  ElementId identity{};
  std::vector<std::pair<ElementId, ElementId>> inverse;  // (x, x^-1), sorted by x
};

struct GreenResult {
  bool holds = false;
  std::optional<ElementPair> witness;  // (b, c) with b, c, bc in the class
};

struct ClosureResult {
  bool closed = false;
  std::optional<ElementPair> witness;  // (x, y) with xy outside the subset
};

struct SubgroupResult {
  bool group = false;
  std::optional<GroupWitness> witness;
};

struct JClass {
  ElementSet members;
  ElementId representative;  // the unique ideal element of the class
  GreenResult green;
  ClosureResult subsemigroup;
  SubgroupResult subgroup;
};

/// Partition of the carrier by equality of the ideal closure.
struct JClassification {
  std::vector<ElementId> closure;  // closure[x] = t(x)
  std::vector<JClass> classes;     // ordered by smallest member

  [[nodiscard]] const JClass& class_of(ElementId x) const;
};

[[nodiscard]] JClassification j_classes(const LeSemigroup& s);

[[nodiscard]] GreenResult green_condition(const LeSemigroup& s, const ElementSet& cls);

[[nodiscard]] ClosureResult is_subsemigroup(const LeSemigroup& s,
                                            const ElementSet& subset);

/// Group test under the multiplication alone; the order plays no role.
[[nodiscard]] SubgroupResult is_subgroup(const LeSemigroup& s, const ElementSet& subset);

/// The principal down-set {x : x <= e} of an ideal element e, as an
/// le-semigroup in its own right with greatest element e.
struct DownSet {
  ElementId generator;          // e, in parent ids
  ElementSet members;           // parent ids, ascending
  LeSemigroup structure;        // local ids 0..members.size()-1
  std::vector<ElementId> embed;  // local id -> parent id

  [[nodiscard]] std::optional<ElementId> local(ElementId parent) const;
};

/// Throws Error(NotIdealElement) unless e is an ideal element of s.
[[nodiscard]] DownSet down_set(const LeSemigroup& s, ElementId e);

/// Class of e under the relation J computed inside down_set(s, e), returned
/// in parent ids.
[[nodiscard]] ElementSet relative_top_class(const LeSemigroup& s, ElementId e);

}  // namespace lesgp
