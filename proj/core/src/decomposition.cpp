#include "lesgp/decomposition.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "lesgp/errors.hpp"
#include "lesgp/green.hpp"
#include "lesgp/ideals.hpp"

namespace lesgp {
namespace {

constexpr std::array kTheoremOrder{
    TheoremId::t_least, TheoremId::kp,     TheoremId::t_idemp, TheoremId::lp,
    TheoremId::ir,      TheoremId::gc,     TheoremId::idp,     TheoremId::main,
    TheoremId::sd_fwd,  TheoremId::sd_bwd, TheoremId::equiv,   TheoremId::ext9,
    TheoremId::ext13,
};

// A subset closed under * and v, with `top` as its greatest element, viewed as
// a join-semilattice ordered semigroup in its own right.
class Substructure {
 public:
  Substructure(const LeSemigroup& s, const ElementSet& members, ElementId top)
      : s_(s), members_(members), top_(top) {}

  [[nodiscard]] ElementSet left_ideal_elements() const {
    ElementSet out;
    for (auto b : members_) {
      if (s_.leq(s_(top_, b), b)) out.push_back(b);
    }
    return out;
  }

  [[nodiscard]] bool left_simple() const {
    return left_ideal_elements() == ElementSet{top_};
  }

  [[nodiscard]] bool semisimple() const {
    return std::ranges::all_of(members_, [&](ElementId x) {
      return s_.leq(x, s_(s_(top_, x, top_), s_(x, top_)));
    });
  }

  [[nodiscard]] bool intra_regular() const {
    return std::ranges::all_of(members_, [&](ElementId x) {
      return s_.leq(x, s_(s_(top_, x, x), top_));
    });
  }

  [[nodiscard]] bool lambda() const {
    const auto left = left_ideal_elements();
    for (auto a : left) {
      for (auto b : left) {
        if (s_(a, b) != s_(b, a)) return false;
      }
    }
    return true;
  }

 private:
  const LeSemigroup& s_;
  const ElementSet& members_;
  ElementId top_;
};

bool join_closed(const LeSemigroup& s, const ElementSet& members) {
  for (auto x : members) {
    for (auto y : members) {
      if (!contains(members, s.join(x, y))) return false;
    }
  }
  return true;
}

// Everything the individual checks share, computed once per structure.
struct Context {
  explicit Context(const LeSemigroup& structure)
      : s(structure),
        props(structure_flags(structure)),
        jc(j_classes(structure)),
        decomposition(check_decomposition(structure)) {}

  const LeSemigroup& s;
  PropertyReport props;
  JClassification jc;
  DecompositionReport decomposition;

  [[nodiscard]] bool idempotent(ElementId x) const { return s(x, x) == x; }
};

class ReportBuilder {
 public:
  explicit ReportBuilder(TheoremId id) { report_.id = id; }

  void fail(std::string claim, std::vector<ElementId> elements) {
    // Keep only the first witness for each sub-claim.
    for (const auto& w : report_.witnesses) {
      if (w.claim == claim) {
        conclusion_ = false;
        return;
      }
    }
    report_.witnesses.push_back({std::move(claim), std::move(elements)});
    conclusion_ = false;
  }

  void check(bool ok, std::string claim, std::vector<ElementId> elements) {
    if (!ok) fail(std::move(claim), std::move(elements));
  }

  TheoremReport finish(bool hypothesis) {
    report_.hypothesis_holds = hypothesis;
    if (!hypothesis) {
      report_.conclusion_holds.reset();
      report_.status = Status::vacuous;
      report_.witnesses.clear();
    } else {
      report_.conclusion_holds = conclusion_;
      report_.status = conclusion_ ? Status::verified : Status::violation;
    }
    return std::move(report_);
  }

 private:
  TheoremReport report_;
  bool conclusion_ = true;
};

// tau x tau = tau = e x e, tau x e = tau = e x tau.
void check_lp_equalities(const Context& c, ReportBuilder& out, ElementId tau,
                         ElementId x) {
  const auto& s = c.s;
  const ElementId e = s.top();
  out.check(s(tau, x, tau) == tau, "tau*x*tau=tau", {x, tau});
  out.check(s(e, x, e) == tau, "e*x*e=tau", {x, tau});
  out.check(s(tau, x, e) == tau, "tau*x*e=tau", {x, tau});
  out.check(s(e, x, tau) == tau, "e*x*tau=tau", {x, tau});
}

void check_tau_e(const Context& c, ReportBuilder& out, ElementId tau) {
  const ElementId e = c.s.top();
  out.check(c.s(tau, e) == tau, "tau*e=tau", {tau});
  out.check(c.s(e, tau) == tau, "e*tau=tau", {tau});
}

TheoremReport check_t_least(const Context& c) {
  ReportBuilder out(TheoremId::t_least);
  const auto& s = c.s;
  for (auto x : s.elements()) {
    const ElementId t = c.jc.closure[x.index()];
    out.check(contains(c.props.ideal_elements, t), "closure-is-ideal", {x, t});
    out.check(s.leq(x, t), "closure-above", {x, t});
    for (auto tau : c.props.ideal_elements) {
      if (s.leq(x, tau)) out.check(s.leq(t, tau), "closure-least", {x, t, tau});
    }
  }
  return out.finish(true);
}

TheoremReport check_kp(const Context& c) {
  ReportBuilder out(TheoremId::kp);
  for (const auto& cls : c.jc.classes) {
    ElementSet ideals;
    std::ranges::copy_if(cls.members, std::back_inserter(ideals), [&](ElementId x) {
      return contains(c.props.ideal_elements, x);
    });
    out.check(ideals == ElementSet{cls.representative}, "unique-ideal-element", ideals);
    for (auto a : cls.members) {
      out.check(c.jc.closure[a.index()] == cls.representative, "representative-is-t(a)",
                {a, cls.representative});
    }
  }
  return out.finish(true);
}

TheoremReport check_t_idemp(const Context& c) {
  ReportBuilder out(TheoremId::t_idemp);
  for (const auto& cls : c.jc.classes) {
    const ElementId tau = cls.representative;
    const bool idem = c.idempotent(tau);
    if (cls.green.holds && !idem) {
      out.fail("green=>idempotent",
               {tau, cls.green.witness->first, cls.green.witness->second});
    }
    out.check(!idem || cls.green.holds, "idempotent=>green", {tau});
  }
  return out.finish(true);
}

TheoremReport check_lp(const Context& c) {
  ReportBuilder out(TheoremId::lp);
  bool hypothesis = false;
  for (const auto& cls : c.jc.classes) {
    if (!cls.subsemigroup.closed) continue;
    hypothesis = true;
    for (auto x : cls.members) check_lp_equalities(c, out, cls.representative, x);
    check_tau_e(c, out, cls.representative);
  }
  return out.finish(hypothesis);
}

TheoremReport check_ir(const Context& c) {
  ReportBuilder out(TheoremId::ir);
  const bool hypothesis = c.props.regular && c.props.intra_regular;
  if (hypothesis) {
    for (auto x : c.s.elements()) {
      const ElementId tau = c.jc.closure[x.index()];
      check_lp_equalities(c, out, tau, x);
      check_tau_e(c, out, tau);
    }
  }
  return out.finish(hypothesis);
}

TheoremReport check_gc(const Context& c) {
  ReportBuilder out(TheoremId::gc);
  for (const auto& cls : c.jc.classes) {
    const bool single_idempotent =
        cls.members.size() == 1 && c.idempotent(cls.members.front());
    out.check(!cls.subgroup.group || single_idempotent, "subgroup=>single-idempotent",
              cls.members);
    out.check(!single_idempotent || cls.subgroup.group, "single-idempotent=>subgroup",
              cls.members);
  }
  return out.finish(true);
}

TheoremReport check_idp(const Context& c) {
  ReportBuilder out(TheoremId::idp);
  bool hypothesis = false;
  if (c.props.lambda) {
    for (auto e : c.props.ideal_elements) {
      if (!c.idempotent(e)) continue;
      hypothesis = true;
      const ElementSet rel = relative_top_class(c.s, e);
      const auto closed = is_subsemigroup(c.s, rel);
      if (!closed.closed) {
        out.fail("relative-top-class-closed",
                 {e, closed.witness->first, closed.witness->second});
      }
    }
  }
  return out.finish(hypothesis);
}

TheoremReport check_main(const Context& c) {
  ReportBuilder out(TheoremId::main);
  if (c.props.lambda) {
    for (const auto& cls : c.jc.classes) {
      if (!cls.green.holds) continue;
      const ElementId tau = cls.representative;
      if (!cls.subsemigroup.closed) {
        out.fail("green=>subsemigroup",
                 {tau, cls.subsemigroup.witness->first, cls.subsemigroup.witness->second});
      }
      // Inclusion of J_tau in the relative class of tau inside ]tau].
      const ElementSet rel = relative_top_class(c.s, tau);
      for (auto x : cls.members) {
        out.check(contains(rel, x), "class-within-relative-class", {tau, x});
      }
    }
  }
  return out.finish(c.props.lambda);
}

void record_decomposition_failures(const DecompositionReport& d, ReportBuilder& out) {
  out.check(d.disjoint, "disjoint", {});
  out.check(d.cover, "cover", {});
  if (!d.index_semilattice) {
    out.fail("index-semilattice", {d.index_witness->first, d.index_witness->second});
  }
  if (!d.class_product_containment) {
    const auto& w = *d.containment_witness;
    out.fail("class-product-containment",
             {w.x, w.y, w.alpha, w.beta, w.closure_of_product});
  }
  for (const auto& cls : d.classes) {
    const ElementId r = cls.representative;
    out.check(cls.subsemigroup, "class-subsemigroup", {r});
    out.check(cls.join_closed, "class-join-closed", {r});
    out.check(cls.left_simple.value_or(false), "class-left-simple", {r});
    out.check(cls.semisimple.value_or(false), "class-semisimple", {r});
    out.check(cls.intra_regular.value_or(false), "class-intra-regular", {r});
    out.check(cls.lambda.value_or(false), "class-lambda", {r});
  }
}

TheoremReport check_sd_fwd(const Context& c) {
  ReportBuilder out(TheoremId::sd_fwd);
  const bool hypothesis = c.props.semisimple && c.props.lambda;
  if (hypothesis) record_decomposition_failures(c.decomposition, out);
  return out.finish(hypothesis);
}

TheoremReport check_sd_bwd(const Context& c) {
  ReportBuilder out(TheoremId::sd_bwd);
  const auto& d = c.decomposition;
  const bool hypothesis =
      d.class_product_containment &&
      std::ranges::all_of(d.classes, [](const ClassRecord& r) {
        return r.subsemigroup && r.left_simple.value_or(false);
      });
  if (hypothesis) {
    for (auto x : c.s.elements()) {
      const auto f = element_flags(c.s, x);
      out.check(f.semisimple, "semisimple", {x});
    }
    if (c.props.lambda_witness) {
      out.fail("lambda", {c.props.lambda_witness->first, c.props.lambda_witness->second});
    }
  }
  return out.finish(hypothesis);
}

TheoremReport check_equiv(const Context& c) {
  ReportBuilder out(TheoremId::equiv);
  const bool forward = c.props.semisimple && c.props.lambda;
  const bool backward = c.props.intra_regular;
  for (auto x : c.s.elements()) {
    const auto f = element_flags(c.s, x);
    if (forward) out.check(f.intra_regular, "semisimple+lambda=>intra-regular", {x});
    if (backward) out.check(f.semisimple, "intra-regular=>semisimple", {x});
  }
  return out.finish(forward || backward);
}

TheoremReport check_ext9(const Context& c) {
  ReportBuilder out(TheoremId::ext9);
  const bool hypothesis = c.props.semisimple;
  if (hypothesis) {
    const auto& ideals = c.props.ideal_elements;
    for (auto a : ideals) {
      out.check(c.idempotent(a), "idempotent", {a});
      for (auto b : ideals) {
        out.check(contains(ideals, c.s(a, b)), "closed", {a, b});
        out.check(c.s(a, b) == c.s(b, a), "commutative", {a, b});
      }
    }
  }
  return out.finish(hypothesis);
}

TheoremReport check_ext13(const Context& c) {
  ReportBuilder out(TheoremId::ext13);
  const bool hypothesis = std::ranges::all_of(c.props.ideal_elements, [&](ElementId t) {
    return is_semiprime(c.s, t).semiprime;
  });
  if (hypothesis) {
    for (auto x : c.s.elements()) {
      out.check(element_flags(c.s, x).intra_regular, "intra-regular", {x});
    }
  }
  return out.finish(hypothesis);
}

TheoremReport dispatch(const Context& c, TheoremId id) {
  switch (id) {
    case TheoremId::t_least: return check_t_least(c);
    case TheoremId::kp: return check_kp(c);
    case TheoremId::t_idemp: return check_t_idemp(c);
    case TheoremId::lp: return check_lp(c);
    case TheoremId::ir: return check_ir(c);
    case TheoremId::gc: return check_gc(c);
    case TheoremId::idp: return check_idp(c);
    case TheoremId::main: return check_main(c);
    case TheoremId::sd_fwd: return check_sd_fwd(c);
    case TheoremId::sd_bwd: return check_sd_bwd(c);
    case TheoremId::equiv: return check_equiv(c);
    case TheoremId::ext9: return check_ext9(c);
    case TheoremId::ext13: return check_ext13(c);
  }
  throw Error(ErrorKind::UnknownTheorem,
              "theorem id " + std::to_string(static_cast<int>(id)));
}

}  // namespace

std::span<const TheoremId> all_theorems() noexcept { return kTheoremOrder; }

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::t_least: return "t-least";
    case TheoremId::kp: return "kp";
    case TheoremId::t_idemp: return "t-idemp";
    case TheoremId::lp: return "lp";
    case TheoremId::ir: return "ir";
    case TheoremId::gc: return "gc";
    case TheoremId::idp: return "idp";
    case TheoremId::main: return "main";
    case TheoremId::sd_fwd: return "sd-fwd";
    case TheoremId::sd_bwd: return "sd-bwd";
    case TheoremId::equiv: return "equiv";
    case TheoremId::ext9: return "ext9";
    case TheoremId::ext13: return "ext13";
  }
  return "unknown";
}

TheoremId parse_theorem_id(std::string_view name) {
  for (auto id : kTheoremOrder) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorKind::UnknownTheorem, "no theorem named '" + std::string(name) + "'");
}

std::string_view to_string(Status status) noexcept {
  switch (status) {
    case Status::verified: return "verified";
    case Status::vacuous: return "vacuous";
    case Status::violation: return "violation";
  }
  return "unknown";
}

bool DecompositionReport::passes() const {
  return disjoint && cover && index_semilattice && class_product_containment &&
         std::ranges::all_of(classes, [](const ClassRecord& r) {
           return r.subsemigroup && r.join_closed && r.left_simple.value_or(false) &&
                  r.semisimple.value_or(false) && r.intra_regular.value_or(false) &&
                  r.lambda.value_or(false);
         });
}

DecompositionReport check_decomposition(const LeSemigroup& s) {
  const JClassification jc = j_classes(s);
  DecompositionReport d;

  std::vector<int> hits(s.size(), 0);
  for (const auto& cls : jc.classes) {
    d.semilattice_elements.push_back(cls.representative);
    for (auto x : cls.members) ++hits[x.index()];

    ClassRecord rec;
    rec.representative = cls.representative;
    rec.members = cls.members;
    rec.subsemigroup = cls.subsemigroup.closed;
    rec.join_closed = join_closed(s, cls.members);
    if (rec.applicable()) {
      const Substructure sub(s, cls.members, cls.representative);
      rec.left_simple = sub.left_simple();
      rec.semisimple = sub.semisimple();
      rec.intra_regular = sub.intra_regular();
      rec.lambda = sub.lambda();
    }
    d.classes.push_back(std::move(rec));
  }
  std::ranges::sort(d.semilattice_elements);
  d.disjoint = std::ranges::all_of(hits, [](int h) { return h <= 1; });
  d.cover = std::ranges::all_of(hits, [](int h) { return h >= 1; });

  d.index_semilattice = true;
  const auto& ys = d.semilattice_elements;
  for (auto a : ys) {
    for (auto b : ys) {
      const bool ok = contains(ys, s(a, b)) && s(a, b) == s(b, a) && s(a, a) == a;
      if (!ok) {
        d.index_semilattice = false;
        d.index_witness = std::pair{a, b};
        break;
      }
    }
    if (!d.index_semilattice) break;
  }

  d.class_product_containment = true;
  for (const auto& ca : jc.classes) {
    for (const auto& cb : jc.classes) {
      const ElementId target = s(ca.representative, cb.representative);
      for (auto x : ca.members) {
        for (auto y : cb.members) {
          const ElementId t = jc.closure[s(x, y).index()];
          if (t != target && d.class_product_containment) {
            d.class_product_containment = false;
            d.containment_witness = ContainmentWitness{
                x, y, ca.representative, cb.representative, t};
          }
        }
      }
    }
  }
  return d;
}

TheoremReport check_theorem(const LeSemigroup& s, TheoremId id) {
  const Context c(s);
  return dispatch(c, id);
}

std::vector<TheoremReport> check_all(const LeSemigroup& s) {
  const Context c(s);
  std::vector<TheoremReport> out;
  out.reserve(kTheoremOrder.size());
  for (auto id : kTheoremOrder) out.push_back(dispatch(c, id));
  return out;
}

bool violation_free(std::span<const TheoremReport> reports) {
  return std::ranges::none_of(
      reports, [](const TheoremReport& r) { return r.status == Status::violation; });
}

}  // namespace lesgp
