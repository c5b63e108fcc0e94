#include "lesgp/green.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lesgp/errors.hpp"
#include "lesgp/ideals.hpp"

namespace lesgp {

const JClass& JClassification::class_of(ElementId x) const {
  for (const auto& c : classes) {
    if (contains(c.members, x)) return c;
  }
  throw Error(ErrorKind::IndexOutOfRange,
              "element " + std::to_string(x.index()) + " is not classified");
}

JClassification j_classes(const LeSemigroup& s) {
  JClassification out;
  out.closure.reserve(s.size());
  std::map<ElementId, std::size_t> slot;  // closure value -> class index
  for (auto x : s.elements()) {
    const ElementId t = ideal_closure(s, x);
    out.closure.push_back(t);
    auto [it, inserted] = slot.try_emplace(t, out.classes.size());
    if (inserted) {
      out.classes.emplace_back().representative = t;
    }
    out.classes[it->second].members.push_back(x);
  }
  for (auto& c : out.classes) {
    c.green = green_condition(s, c.members);
    c.subsemigroup = is_subsemigroup(s, c.members);
    c.subgroup = is_subgroup(s, c.members);
  }
  return out;
}

GreenResult green_condition(const LeSemigroup& s, const ElementSet& cls) {
  for (auto b : cls) {
    for (auto c : cls) {
      if (contains(cls, s(b, c))) return {true, ElementPair{b, c}};
    }
  }
  return {false, std::nullopt};
}

ClosureResult is_subsemigroup(const LeSemigroup& s, const ElementSet& subset) {
  for (auto x : subset) {
    for (auto y : subset) {
      if (!contains(subset, s(x, y))) return {false, ElementPair{x, y}};
    }
  }
  return {true, std::nullopt};
}

SubgroupResult is_subgroup(const LeSemigroup& s, const ElementSet& subset) {
  if (subset.empty() || !is_subsemigroup(s, subset).closed) return {};
  std::optional<ElementId> identity;
  for (auto i : subset) {
    bool unit = std::ranges::all_of(
        subset, [&](ElementId x) { return s(i, x) == x && s(x, i) == x; });
    if (unit) {
      identity = i;
      break;
    }
  }
  if (!identity) return {};
  GroupWitness w{.identity = *identity, .inverse = {}};
  for (auto x : subset) {
    auto inv = std::ranges::find_if(subset, [&](ElementId y) {
      return s(x, y) == *identity && s(y, x) == *identity;
    });
    if (inv == subset.end()) return {};
    w.inverse.emplace_back(x, *inv);
  }
  return {true, std::move(w)};
}

std::optional<ElementId> DownSet::local(ElementId parent) const {
  auto it = std::ranges::lower_bound(members, parent);
  if (it == members.end() || *it != parent) return std::nullopt;
  return ElementId{static_cast<std::size_t>(it - members.begin())};
}

DownSet down_set(const LeSemigroup& s, ElementId e) {
  if (e.index() >= s.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "element " + std::to_string(e.index()) + " is out of range",
                {e.index()});
  }
  if (!is_ideal_element(s, e)) {
    throw Error(ErrorKind::NotIdealElement,
                "element " + std::to_string(e.index()) + " is not an ideal element",
                {e.index()});
  }
  ElementSet members;
  for (auto x : s.elements()) {
    if (s.leq(x, e)) members.push_back(x);
  }
  const std::size_t m = members.size();
  std::vector<std::size_t> local_of(s.size(), m);
  for (std::size_t i = 0; i < m; ++i) local_of[members[i].index()] = i;

  BoolMatrix leq(m);
  MultiplicationTable mul(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      leq(i, j) = s.leq(members[i], members[j]) ? 1 : 0;
      mul(i, j) = ElementId{local_of[s(members[i], members[j]).index()]};
    }
  }
  std::vector<std::string> names;
  if (!s.names().empty()) {
    for (auto x : members) names.push_back(s.names()[x.index()]);
  }
  // Out-of-range products (local index m) are rejected by the validator.
  auto structure = build_le_semigroup(build_lattice(leq), mul, std::move(names));
  return DownSet{.generator = e,
                 .members = members,
                 .structure = std::move(structure),
                 .embed = members};
}

ElementSet relative_top_class(const LeSemigroup& s, ElementId e) {
  const DownSet d = down_set(s, e);
  const ElementId local_top = d.structure.top();
  ElementSet out;
  for (auto x : d.structure.elements()) {
    if (ideal_closure(d.structure, x) == local_top) out.push_back(d.embed[x.index()]);
  }
  return out;
}

}  // namespace lesgp
