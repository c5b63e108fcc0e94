#pragma once

#include <optional>
#include <utility>

#include "lesgp/element.hpp"
#include "lesgp/le_semigroup.hpp"

namespace lesgp {

/// Which inequality defines intra-regularity of x.
///  - standard: x <= e x^2 e
///  - literal:  e <= e x^2 e (only e-absorbing structures pass; experimental)
enum class IntraRegularity { standard, literal };

struct ElementFlags {
  bool regular = false;        // x <= x e x
  bool intra_regular = false;  // see IntraRegularity
  bool semisimple = false;     // x <= e x e x e
  bool left_ideal = false;     // e x <= x
  bool right_ideal = false;    // x e <= x
  bool ideal = false;          // left_ideal && right_ideal

  bool operator==(const ElementFlags&) const = default;
};

struct PropertyReport {
  bool regular = false;
  bool intra_regular = false;
  bool semisimple = false;
  bool left_simple = false;  // top is the only left ideal element
  bool lambda = false;       // left ideal elements pairwise commute
  ElementSet ideal_elements;
  ElementSet left_ideal_elements;
  std::optional<std::pair<ElementId, ElementId>> lambda_witness;
};

struct SemiprimeResult {
  bool semiprime = false;
  std::optional<ElementId> witness;  // a with a*a <= t but not a <= t
};

/// Least ideal element above x: e x e v x e v e x v x.
[[nodiscard]] ElementId ideal_closure(const LeSemigroup& s, ElementId x);

[[nodiscard]] ElementFlags element_flags(
    const LeSemigroup& s, ElementId x,
    IntraRegularity variant = IntraRegularity::standard);

[[nodiscard]] SemiprimeResult is_semiprime(const LeSemigroup& s, ElementId t);

[[nodiscard]] bool is_ideal_element(const LeSemigroup& s, ElementId x);
[[nodiscard]] bool is_left_ideal_element(const LeSemigroup& s, ElementId x);

/// Global flags are the conjunction of the element flags over the carrier.
/// The Lambda witness is the lexicographically first non-commuting pair.
[[nodiscard]] PropertyReport structure_flags(
    const LeSemigroup& s, IntraRegularity variant = IntraRegularity::standard);

}  // namespace lesgp
