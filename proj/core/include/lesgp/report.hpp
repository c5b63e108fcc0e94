#pragma once

#include <span>
#include <string>
#include <vector>

#include "lesgp/decomposition.hpp"
#include "lesgp/green.hpp"
#include "lesgp/ideals.hpp"
#include "lesgp/le_semigroup.hpp"
#include "lesgp/structure_io.hpp"

namespace lesgp {

/// Everything `analyze` prints, computed once. Human and machine output are
/// both rendered from this record.
struct AnalysisDocument {
  StructureDocument structure;
  std::string canonical_hash;
  PropertyReport properties;
  JClassification classification;
  DecompositionReport decomposition;
  std::vector<TheoremReport> theorems;
};

/// `variant` only affects the properties section; theorem checks always use
/// the standard intra-regularity x <= e x^2 e.
[[nodiscard]] AnalysisDocument analyze(
    const LeSemigroup& s, IntraRegularity variant = IntraRegularity::standard);

enum class ReportMode { human, machine };

/// Machine mode is JSON with the stable top-level fields
/// format, structure, properties, ideal_elements, left_ideal_elements,
/// closure, classes, decomposition, theorems, violation_free.
[[nodiscard]] std::string emit_report(const AnalysisDocument& doc, ReportMode mode);

// Section emitters for the narrower CLI verbs; machine output uses the same
// field names as the corresponding section of emit_report.
[[nodiscard]] std::string emit_classes(const JClassification& jc, ReportMode mode);
[[nodiscard]] std::string emit_theorems(std::span<const TheoremReport> reports,
                                        ReportMode mode);
[[nodiscard]] std::string emit_decomposition(const DecompositionReport& d, ReportMode mode);

}  // namespace lesgp
