#include "lesgp/ideals.hpp"

namespace lesgp {

ElementId ideal_closure(const LeSemigroup& s, ElementId x) {
  const ElementId e = s.top();
  return s.join(s.join(s(e, x, e), s(x, e)), s.join(s(e, x), x));
}

bool is_left_ideal_element(const LeSemigroup& s, ElementId x) {
  return s.leq(s(s.top(), x), x);
}

bool is_ideal_element(const LeSemigroup& s, ElementId x) {
  return is_left_ideal_element(s, x) && s.leq(s(x, s.top()), x);
}

ElementFlags element_flags(const LeSemigroup& s, ElementId x,
                           IntraRegularity variant) {
  const ElementId e = s.top();
  const ElementId e_xx_e = s(s(e, x, x), e);
  ElementFlags f;
  f.regular = s.leq(x, s(x, e, x));
  f.intra_regular = variant == IntraRegularity::standard ? s.leq(x, e_xx_e)
                                                         : s.leq(e, e_xx_e);
  f.semisimple = s.leq(x, s(s(e, x, e), s(x, e)));
  f.left_ideal = s.leq(s(e, x), x);
  f.right_ideal = s.leq(s(x, e), x);
  f.ideal = f.left_ideal && f.right_ideal;
  return f;
}

SemiprimeResult is_semiprime(const LeSemigroup& s, ElementId t) {
  for (auto a : s.elements()) {
    if (s.leq(s(a, a), t) && !s.leq(a, t)) return {false, a};
  }
  return {true, std::nullopt};
}

PropertyReport structure_flags(const LeSemigroup& s, IntraRegularity variant) {
  PropertyReport r;
  r.regular = r.intra_regular = r.semisimple = true;
  for (auto x : s.elements()) {
    const auto f = element_flags(s, x, variant);
    r.regular = r.regular && f.regular;
    r.intra_regular = r.intra_regular && f.intra_regular;
    r.semisimple = r.semisimple && f.semisimple;
    if (f.ideal) r.ideal_elements.push_back(x);
    if (f.left_ideal) r.left_ideal_elements.push_back(x);
  }
  r.left_simple = r.left_ideal_elements == ElementSet{s.top()};

  const auto& left = r.left_ideal_elements;
  for (std::size_t i = 0; i < left.size() && !r.lambda_witness; ++i) {
    for (std::size_t j = i + 1; j < left.size(); ++j) {
      if (s(left[i], left[j]) != s(left[j], left[i])) {
        r.lambda_witness = std::pair{left[i], left[j]};
        break;
      }
    }
  }
  r.lambda = !r.lambda_witness.has_value();
  return r;
}

}  // namespace lesgp
