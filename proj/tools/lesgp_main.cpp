// lesgp: validate, analyze, enumerate and hunt finite le-semigroups.
//
// Exit codes: 0 success, 1 theorem violation (or a hunt hit under
// --expect-none), 2 invalid input or usage.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lesgp/config.hpp"
#include "lesgp/decomposition.hpp"
#include "lesgp/enumerate.hpp"
#include "lesgp/errors.hpp"
#include "lesgp/green.hpp"
#include "lesgp/report.hpp"
#include "lesgp/structure_io.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInvalid = 2;

using lesgp::ReportMode;

struct Options {
  bool machine = false;
  std::size_t jobs = 1;
  std::string file;
  std::string theorem = "all";
  std::size_t element = 0;
  std::size_t order = 1;
  bool canonical = false;  // enumerate only; hunts are always canonical
  bool up_to = false;
  std::string out_dir;
  std::vector<std::string> require;
  std::vector<std::string> forbid;
  std::size_t limit = 0;
  bool expect_none = false;
  bool strict_intra = false;
};

ReportMode mode(const Options& o) { return o.machine ? ReportMode::machine : ReportMode::human; }

void print_error(const lesgp::Error& e) {
  std::cerr << "error: " << e.what();
  if (!e.witness().empty()) {
    std::cerr << " [witness";
    for (auto w : e.witness()) std::cerr << ' ' << w;
    std::cerr << ']';
  }
  std::cerr << '\n';
}

int cmd_validate(const Options& o) {
  const auto s = lesgp::load_structure(o.file);
  if (o.machine) {
    std::cout << nlohmann::ordered_json{{"valid", true},
                                        {"n", s.size()},
                                        {"top", s.top().index()},
                                        {"bottom", s.bottom().index()}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "valid le-semigroup: n=" << s.size() << " top=" << s.top()
              << " bottom=" << s.bottom() << '\n';
  }
  return kOk;
}

int cmd_analyze(const Options& o) {
  const auto s = lesgp::load_structure(o.file);
  const auto variant =
      o.strict_intra ? lesgp::IntraRegularity::literal : lesgp::IntraRegularity::standard;
  const auto doc = lesgp::analyze(s, variant);
  std::cout << lesgp::emit_report(doc, mode(o));
  return lesgp::violation_free(doc.theorems) ? kOk : kViolation;
}

int cmd_jclasses(const Options& o) {
  const auto s = lesgp::load_structure(o.file);
  std::cout << lesgp::emit_classes(lesgp::j_classes(s), mode(o));
  return kOk;
}

int cmd_check(const Options& o) {
  const auto s = lesgp::load_structure(o.file);
  std::vector<lesgp::TheoremReport> reports;
  if (o.theorem == "all") {
    reports = lesgp::check_all(s);
  } else {
    reports.push_back(lesgp::check_theorem(s, lesgp::parse_theorem_id(o.theorem)));
  }
  std::cout << lesgp::emit_theorems(reports, mode(o));
  return lesgp::violation_free(reports) ? kOk : kViolation;
}

int cmd_decompose(const Options& o) {
  const auto s = lesgp::load_structure(o.file);
  std::cout << lesgp::emit_decomposition(lesgp::check_decomposition(s), mode(o));
  return kOk;
}

int cmd_downset(const Options& o) {
  const auto s = lesgp::load_structure(o.file);
  if (o.element >= s.size()) {
    throw lesgp::Error(lesgp::ErrorKind::IndexOutOfRange,
                       "element " + std::to_string(o.element) + " is out of range",
                       {o.element});
  }
  const auto d = lesgp::down_set(s, lesgp::ElementId{o.element});
  const std::string text = lesgp::serialize_structure(lesgp::to_document(d.structure));
  if (o.machine) {
    nlohmann::ordered_json embed = nlohmann::ordered_json::array();
    for (auto x : d.embed) embed.push_back(x.index());
    std::cout << nlohmann::ordered_json{{"generator", d.generator.index()},
                                        {"embed", embed},
                                        {"structure", text}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "# down-set of " << d.generator << "; local i is parent";
    for (auto x : d.embed) std::cout << ' ' << x;
    std::cout << '\n' << text;
  }
  return kOk;
}

std::vector<std::size_t> orders(const Options& o) {
  std::vector<std::size_t> out;
  for (std::size_t n = o.up_to ? 1 : o.order; n <= o.order; ++n) out.push_back(n);
  return out;
}

int cmd_enumerate(const Options& o) {
  const lesgp::EnumerationOptions opts{.jobs = o.jobs, .split_depth = 0};
  const auto dedupe = o.canonical ? lesgp::Dedupe::canonical : lesgp::Dedupe::labeled;
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (auto n : orders(o)) {
    lesgp::EnumerationTask task;
    task.n = n;
    task.dedupe = dedupe;
    const auto found = lesgp::enumerate_le_semigroups(task, opts);
    (void)lesgp::write_corpus(o.out_dir, found, dedupe);
    summary.push_back({{"order", n}, {"count", found.size()}});
    if (!o.machine) std::cout << "order " << n << ": " << found.size() << " structures\n";
  }
  if (o.machine) std::cout << summary.dump(2) << '\n';
  return kOk;
}

int cmd_hunt(const Options& o) {
  const lesgp::EnumerationOptions opts{.jobs = o.jobs, .split_depth = 0};
  std::size_t hits = 0;
  nlohmann::ordered_json found_json = nlohmann::ordered_json::array();
  for (auto n : orders(o)) {
    lesgp::EnumerationTask task;
    task.n = n;
    task.dedupe = lesgp::Dedupe::canonical;
    task.require = o.require;
    task.forbid = o.forbid;
    if (o.limit > 0) task.limit = o.limit - std::min(hits, o.limit);
    if (task.limit && *task.limit == 0) break;
    const auto found = lesgp::hunt(task, opts);
    for (const auto& s : found) {
      const std::string text = lesgp::serialize_structure(lesgp::to_document(s));
      if (o.machine) {
        found_json.push_back(text);
      } else {
        std::cout << "# hit " << hits << " (n=" << n << ")\n" << text << '\n';
      }
      ++hits;
    }
    if (!o.out_dir.empty()) (void)lesgp::write_corpus(o.out_dir, found, lesgp::Dedupe::canonical);
  }
  if (o.machine) {
    std::cout << nlohmann::ordered_json{{"count", hits}, {"structures", found_json}}.dump(2)
              << '\n';
  } else {
    std::cout << "# " << hits << " structure(s) found\n";
  }
  return (o.expect_none && hits > 0) ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lesgp - finite lattice-ordered semigroups: validation, J-classes, "
               "theorem checks and enumeration"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_flag("--machine", o.machine, "Emit machine-readable JSON");
  app.add_option("--jobs,-j", o.jobs, "Worker threads for enumeration")
      ->check(CLI::PositiveNumber);

  auto file_arg = [&](CLI::App* sub) {
    sub->add_option("FILE", o.file, "Structure file")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check the le-semigroup axioms");
  file_arg(validate);

  auto* analyze = app.add_subcommand("analyze", "Full analysis report");
  file_arg(analyze);
  analyze->add_flag("--strict-intra", o.strict_intra,
                    "Use e <= e x^2 e for intra-regularity in the properties section");

  auto* jclasses = app.add_subcommand("jclasses", "J-classes and their Green verdicts");
  file_arg(jclasses);

  auto* check = app.add_subcommand("check", "Run theorem checks");
  file_arg(check);
  check->add_option("--theorem,-t", o.theorem, "Theorem id or 'all'");

  auto* decompose = app.add_subcommand("decompose", "Semilattice decomposition by J-classes");
  file_arg(decompose);

  auto* downset = app.add_subcommand("downset", "Down-set of an ideal element");
  file_arg(downset);
  downset->add_option("--element,-e", o.element, "Ideal element index")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Write all le-semigroups of order N");
  enumerate->add_option("-n", o.order, "Order")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--canonical", o.canonical, "One structure per isomorphism class");
  enumerate->add_flag("--up-to", o.up_to, "Enumerate every order from 1 to N");
  enumerate->add_option("-o,--output", o.out_dir, "Corpus directory")->required();

  auto* hunt = app.add_subcommand("hunt", "Search for structures with given properties");
  hunt->add_option("-n", o.order, "Order")->required()->check(CLI::PositiveNumber);
  hunt->add_flag("--up-to", o.up_to, "Search every order from 1 to N");
  hunt->add_option("--require", o.require, "Properties that must hold");
  hunt->add_option("--forbid", o.forbid, "Properties that must fail");
  hunt->add_option("--limit", o.limit, "Stop after K hits");
  hunt->add_option("-o,--output", o.out_dir, "Also write hits to this corpus directory");
  hunt->add_flag("--expect-none", o.expect_none, "Exit 1 if anything is found");
  std::string vocabulary = "Properties:";
  for (auto p : lesgp::property_vocabulary()) vocabulary += " " + std::string(p);
  hunt->footer(vocabulary);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (analyze->parsed()) return cmd_analyze(o);
    if (jclasses->parsed()) return cmd_jclasses(o);
    if (check->parsed()) return cmd_check(o);
    if (decompose->parsed()) return cmd_decompose(o);
    if (downset->parsed()) return cmd_downset(o);
    if (enumerate->parsed()) return cmd_enumerate(o);
    if (hunt->parsed()) return cmd_hunt(o);
  } catch (const lesgp::Error& e) {
    print_error(e);
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
