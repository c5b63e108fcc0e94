#include "lesgp/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace lesgp {
namespace {

using Json = nlohmann::ordered_json;

Json ids(const ElementSet& xs) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x.index());
  return out;
}

Json ids(const std::vector<ElementId>& xs, int /*unsorted*/) {
  Json out = Json::array();
  for (auto x : xs) out.push_back(x.index());
  return out;
}

template <class T, class F>
Json optional_json(const std::optional<T>& v, F f) {
  return v ? f(*v) : Json(nullptr);
}

Json pair_json(const std::pair<ElementId, ElementId>& p) {
  return Json::array({p.first.index(), p.second.index()});
}

Json optional_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

Json properties_json(const PropertyReport& p) {
  return Json{{"regular", p.regular},
              {"intra_regular", p.intra_regular},
              {"semisimple", p.semisimple},
              {"left_simple", p.left_simple},
              {"lambda", p.lambda},
              {"lambda_witness", optional_json(p.lambda_witness, pair_json)}};
}

Json classes_json(const JClassification& jc) {
  Json out = Json::array();
  for (const auto& c : jc.classes) {
    out.push_back(Json{
        {"members", ids(c.members)},
        {"representative", c.representative.index()},
        {"green", c.green.holds},
        {"green_witness", optional_json(c.green.witness, pair_json)},
        {"subsemigroup", c.subsemigroup.closed},
        {"subsemigroup_witness", optional_json(c.subsemigroup.witness, pair_json)},
        {"subgroup", c.subgroup.group},
        {"group_identity",
         optional_json(c.subgroup.witness,
                       [](const GroupWitness& g) { return Json(g.identity.index()); })},
    });
  }
  return out;
}

Json decomposition_json(const DecompositionReport& d) {
  Json classes = Json::array();
  for (const auto& c : d.classes) {
    classes.push_back(Json{{"representative", c.representative.index()},
                           {"members", ids(c.members)},
                           {"subsemigroup", c.subsemigroup},
                           {"join_closed", c.join_closed},
                           {"left_simple", optional_bool(c.left_simple)},
                           {"semisimple", optional_bool(c.semisimple)},
                           {"intra_regular", optional_bool(c.intra_regular)},
                           {"lambda", optional_bool(c.lambda)}});
  }
  return Json{
      {"semilattice_elements", ids(d.semilattice_elements)},
      {"disjoint", d.disjoint},
      {"cover", d.cover},
      {"index_semilattice", d.index_semilattice},
      {"index_witness", optional_json(d.index_witness, pair_json)},
      {"class_product_containment", d.class_product_containment},
      {"containment_witness", optional_json(d.containment_witness,
                                            [](const ContainmentWitness& w) {
                                              return Json{{"x", w.x.index()},
                                                          {"y", w.y.index()},
                                                          {"alpha", w.alpha.index()},
                                                          {"beta", w.beta.index()},
                                                          {"closure_of_product",
                                                           w.closure_of_product.index()}};
                                            })},
      {"passes", d.passes()},
      {"classes", classes},
  };
}

Json theorems_json(std::span<const TheoremReport> reports) {
  Json out = Json::array();
  for (const auto& r : reports) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
      witnesses.push_back(Json{{"claim", w.claim}, {"elements", ids(w.elements, 0)}});
    }
    out.push_back(Json{{"id", std::string(to_string(r.id))},
                       {"status", std::string(to_string(r.status))},
                       {"hypothesis", r.hypothesis_holds},
                       {"conclusion", optional_bool(r.conclusion_holds)},
                       {"witnesses", witnesses}});
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---- human rendering -------------------------------------------------------

std::string set_text(const std::vector<ElementId>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(xs[i].index());
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string tri(const std::optional<bool>& b) { return b ? yes_no(*b) : "n/a"; }

void human_properties(std::ostream& os, const PropertyReport& p) {
  os << "properties\n";
  os << "  regular        " << yes_no(p.regular) << "\n";
  os << "  intra-regular  " << yes_no(p.intra_regular) << "\n";
  os << "  semisimple     " << yes_no(p.semisimple) << "\n";
  os << "  left simple    " << yes_no(p.left_simple) << "\n";
  os << "  lambda         " << yes_no(p.lambda);
  if (p.lambda_witness) {
    os << "  (" << p.lambda_witness->first << "*" << p.lambda_witness->second
       << " != " << p.lambda_witness->second << "*" << p.lambda_witness->first << ")";
  }
  os << "\n";
  os << "  ideal elements       " << set_text(p.ideal_elements) << "\n";
  os << "  left ideal elements  " << set_text(p.left_ideal_elements) << "\n";
}

void human_classes(std::ostream& os, const JClassification& jc) {
  os << "J-classes\n";
  os << "  " << std::left << std::setw(16) << "members" << std::setw(6) << "rep"
     << std::setw(8) << "green" << std::setw(9) << "subsemi" << "subgroup\n";
  for (const auto& c : jc.classes) {
    os << "  " << std::left << std::setw(16) << set_text(c.members) << std::setw(6)
       << c.representative.index() << std::setw(8) << yes_no(c.green.holds) << std::setw(9)
       << yes_no(c.subsemigroup.closed) << yes_no(c.subgroup.group) << "\n";
  }
}

void human_decomposition(std::ostream& os, const DecompositionReport& d) {
  os << "decomposition into J-classes\n";
  os << "  index set Y          " << set_text(d.semilattice_elements) << "\n";
  os << "  disjoint / cover     " << yes_no(d.disjoint) << " / " << yes_no(d.cover) << "\n";
  os << "  Y is a semilattice   " << yes_no(d.index_semilattice) << "\n";
  os << "  J_a J_b in J_ab      " << yes_no(d.class_product_containment);
  if (d.containment_witness) {
    const auto& w = *d.containment_witness;
    os << "  (x=" << w.x << ", y=" << w.y << ", t(xy)=" << w.closure_of_product
       << ", ab=" << w.alpha << "*" << w.beta << ")";
  }
  os << "\n";
  os << "  " << std::left << std::setw(6) << "rep" << std::setw(9) << "subsemi" << std::setw(8)
     << "joins" << std::setw(8) << "lsimple" << std::setw(8) << "ssimple" << std::setw(8)
     << "intra" << "lambda\n";
  for (const auto& c : d.classes) {
    os << "  " << std::left << std::setw(6) << c.representative.index() << std::setw(9)
       << yes_no(c.subsemigroup) << std::setw(8) << yes_no(c.join_closed) << std::setw(8)
       << tri(c.left_simple) << std::setw(8) << tri(c.semisimple) << std::setw(8)
       << tri(c.intra_regular) << tri(c.lambda) << "\n";
  }
  os << "  verdict: " << (d.passes() ? "semilattice of left simple classes" : "does not decompose")
     << "\n";
}

void human_theorems(std::ostream& os, std::span<const TheoremReport> reports) {
  os << "theorems\n";
  for (const auto& r : reports) {
    os << "  " << std::left << std::setw(9) << to_string(r.id) << to_string(r.status) << "\n";
    for (const auto& w : r.witnesses) {
      os << "      " << w.claim << " " << set_text(w.elements) << "\n";
    }
  }
}

}  // namespace

AnalysisDocument analyze(const LeSemigroup& s, IntraRegularity variant) {
  return AnalysisDocument{.structure = to_document(s),
                          .canonical_hash = canonical_key(s).hash_hex(),
                          .properties = structure_flags(s, variant),
                          .classification = j_classes(s),
                          .decomposition = check_decomposition(s),
                          .theorems = check_all(s)};
}

std::string emit_report(const AnalysisDocument& doc, ReportMode mode) {
  if (mode == ReportMode::machine) {
    Json structure{{"n", doc.structure.n}, {"canonical_key", doc.canonical_hash}};
    if (!doc.structure.names.empty()) structure["names"] = doc.structure.names;
    Json closure = Json::array();
    for (auto t : doc.classification.closure) closure.push_back(t.index());
    return dump(Json{{"format", "lesgp-report 1"},
                     {"structure", structure},
                     {"properties", properties_json(doc.properties)},
                     {"ideal_elements", ids(doc.properties.ideal_elements)},
                     {"left_ideal_elements", ids(doc.properties.left_ideal_elements)},
                     {"closure", closure},
                     {"classes", classes_json(doc.classification)},
                     {"decomposition", decomposition_json(doc.decomposition)},
                     {"theorems", theorems_json(doc.theorems)},
                     {"violation_free", violation_free(doc.theorems)}});
  }
  std::ostringstream os;
  os << "structure  n=" << doc.structure.n << "  key=" << doc.canonical_hash << "\n";
  human_properties(os, doc.properties);
  os << "closure t  ";
  for (std::size_t x = 0; x < doc.classification.closure.size(); ++x) {
    os << (x ? "  " : "") << "t(" << x << ")=" << doc.classification.closure[x];
  }
  os << "\n";
  human_classes(os, doc.classification);
  human_decomposition(os, doc.decomposition);
  human_theorems(os, doc.theorems);
  os << (violation_free(doc.theorems) ? "no violations\n" : "VIOLATIONS FOUND\n");
  return os.str();
}

std::string emit_classes(const JClassification& jc, ReportMode mode) {
  if (mode == ReportMode::machine) return dump(Json{{"classes", classes_json(jc)}});
  std::ostringstream os;
  human_classes(os, jc);
  return os.str();
}

std::string emit_theorems(std::span<const TheoremReport> reports, ReportMode mode) {
  if (mode == ReportMode::machine) {
    return dump(Json{{"theorems", theorems_json(reports)},
                     {"violation_free", violation_free(reports)}});
  }
  std::ostringstream os;
  human_theorems(os, reports);
  return os.str();
}

std::string emit_decomposition(const DecompositionReport& d, ReportMode mode) {
  if (mode == ReportMode::machine) return dump(Json{{"decomposition", decomposition_json(d)}});
  std::ostringstream os;
  human_decomposition(os, d);
  return os.str();
}

}  // namespace lesgp
