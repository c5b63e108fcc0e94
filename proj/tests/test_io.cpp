#include <filesystem>
#include <random>
#include <set>

#include "doctest.h"
#include "json.hpp"
#include "lesgp/errors.hpp"
#include "lesgp/report.hpp"
#include "lesgp/structure_io.hpp"
#include "support.hpp"

using namespace lesgp;
using test_support::fixture;
using test_support::id;
namespace fs = std::filesystem;

namespace {

struct Failure {
  ErrorKind kind;
  std::size_t line;
  std::size_t column;
};

Failure parse_failure(std::string_view text) {
  try {
    (void)parse_structure(text);
  } catch (const ParseError& e) {
    return {e.kind(), e.line(), e.column()};
  }
  FAIL("expected a ParseError");
  return {};
}

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("lesgp-test-" + tag + "-" + std::to_string(std::random_device{}()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("parse a fixture") {
  const auto doc =
      parse_structure(read_text_file(std::string(LESGP_FIXTURE_DIR) + "/C2MEET.lesgp"));
  CHECK(doc.version == 1);
  CHECK(doc.n == 2);
  CHECK(doc.names.empty());
  CHECK(doc.leq == BoolMatrix{{1, 1}, {0, 1}});
  CHECK(doc.mul == SquareMatrix<std::size_t>{{0, 0}, {0, 1}});
  CHECK(from_document(doc) == fixture("C2MEET"));
}

TEST_CASE("serialize the one-element structure") {
  CHECK(serialize_structure(to_document(fixture("S1"))) == "lesgp 1\nn 1\nleq\n1\nmul\n0\n");
}

TEST_CASE("comments and blank lines are dropped on round trip") {
  const std::string text = "# header\n\nlesgp 1  \nn 2 # order\nleq\n1 1\n0 1\n\nmul\n0 1\n0 1\n";
  const auto out = serialize_structure(parse_structure(text));
  CHECK(out == "lesgp 1\nn 2\nleq\n1 1\n0 1\nmul\n0 1\n0 1\n");
  CHECK(serialize_structure(parse_structure(out)) == out);
}

TEST_CASE("names are preserved") {
  const std::string text = "lesgp 1\nn 2\nnames z e\nleq\n1 1\n0 1\nmul\n0 0\n0 1\n";
  const auto s = from_document(parse_structure(text));
  CHECK(s.label(id(1)) == "e");
  CHECK(serialize_structure(to_document(s)) == text);
}

TEST_CASE("malformed documents report positions") {
  const auto wide = parse_failure("lesgp 1\nn 2\nleq\n1 1 0\n0 1\nmul\n0 0\n0 1\n");
  CHECK(wide.kind == ErrorKind::DimensionMismatch);
  CHECK(wide.line == 4);
  CHECK(wide.column == 5);

  const auto range = parse_failure("lesgp 1\nn 2\nleq\n1 1\n0 1\nmul\n0 0\n0 2\n");
  CHECK(range.kind == ErrorKind::IndexOutOfRange);
  CHECK(range.line == 8);
  CHECK(range.column == 3);

  CHECK(parse_failure("lesgp 2\nn 1\nleq\n1\nmul\n0\n").kind == ErrorKind::ParseError);
  CHECK(parse_failure("lesgp 1\nn 1\nleq\n1\n").kind == ErrorKind::ParseError);
  CHECK(parse_failure("lesgp 1\nn 1\nleq\nx\nmul\n0\n").kind == ErrorKind::ParseError);
  CHECK(parse_failure("lesgp 1\nn 1\nleq\n1\nmul\n0\nextra\n").line == 7);
  CHECK(parse_failure("lesgp 1\nn 2\nnames a\nleq\n1 1\n0 1\nmul\n0 0\n0 1\n").kind ==
        ErrorKind::DimensionMismatch);
  CHECK(parse_failure("").kind == ErrorKind::ParseError);
}

TEST_CASE("well-formed text with bad algebra fails validation") {
  const auto doc = parse_structure("lesgp 1\nn 2\nleq\n1 1\n0 1\nmul\n0 1\n1 0\n");
  try {
    (void)from_document(doc);
    FAIL("expected NotCompatible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCompatible);
  }
}

TEST_CASE("serialize then parse is the identity (corpus n <= 4)") {
  std::mt19937 rng(3);
  for (const auto& s : test_support::corpus_up_to(4)) {
    const auto text = serialize_structure(to_document(s));
    CHECK(from_document(parse_structure(text)) == s);
    std::vector<std::size_t> perm(s.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = relabel(s, perm);
    const auto rtext = serialize_structure(to_document(r));
    CHECK(serialize_structure(parse_structure(rtext)) == rtext);
  }
}

TEST_CASE("corpus files round-trip byte for byte") {
  TempDir dir("corpus");
  const auto& structures = test_support::corpus(3);
  const auto names = write_corpus(dir.path, structures, Dedupe::canonical);
  REQUIRE(names.size() == 44);
  for (std::size_t k = 0; k < names.size(); ++k) {
    const auto text = read_text_file(dir.path / names[k]);
    CHECK(text == serialize_structure(to_document(structures[k])));
    const auto back = load_structure(dir.path / names[k]);
    CHECK(back == structures[k]);
    CHECK(names[k] == "n3-" + canonical_key(back).hash_hex() + ".lesgp");
  }
  const auto index = write_corpus_index(dir.path);
  CHECK(index.counts.at(3) == 44);
  CHECK(index.files.size() == 44);
  const auto index_text = read_text_file(dir.path / "index");
  CHECK(index_text.rfind("lesgp-index 1\norder 3 count 44\n", 0) == 0);
}

TEST_CASE("labeled corpus names isomorphic copies apart") {
  TempDir dir("labeled");
  EnumerationTask task;
  task.n = 2;
  task.dedupe = Dedupe::labeled;
  const auto structures = enumerate_le_semigroups(task);
  const auto names = write_corpus(dir.path, structures, Dedupe::labeled);
  CHECK(std::set<std::string>(names.begin(), names.end()).size() == structures.size());
  CHECK(write_corpus_index(dir.path).counts.at(2) == structures.size());
}

TEST_CASE("machine report contents") {
  const auto rz = nlohmann::json::parse(emit_report(analyze(fixture("C2RZ")), ReportMode::machine));
  CHECK(rz["format"] == "lesgp-report 1");
  CHECK(rz["properties"]["lambda"] == false);
  CHECK(rz["properties"]["lambda_witness"] == nlohmann::json::array({0, 1}));
  CHECK(rz["violation_free"] == true);

  const auto s1 = nlohmann::json::parse(emit_report(analyze(fixture("S1")), ReportMode::machine));
  REQUIRE(s1["theorems"].size() == 13);
  for (const auto& t : s1["theorems"]) CHECK(t["status"] == "verified");
  CHECK(s1["theorems"][7]["id"] == "main");

  const auto cst =
      nlohmann::json::parse(emit_report(analyze(fixture("C2CONST")), ReportMode::machine));
  REQUIRE(cst["classes"].size() == 1);
  CHECK(cst["classes"][0]["representative"] == 1);
  CHECK(cst["classes"][0]["green"] == true);
  CHECK(cst["classes"][0]["subsemigroup"] == true);
  CHECK(cst["classes"][0]["subgroup"] == false);
  CHECK(cst["structure"]["canonical_key"] == canonical_key(fixture("C2CONST")).hash_hex());
}

TEST_CASE("reports are deterministic") {
  for (const auto& name : test_support::fixture_names()) {
    const auto s = fixture(name);
    for (auto mode : {ReportMode::human, ReportMode::machine}) {
      CHECK(emit_report(analyze(s), mode) == emit_report(analyze(s), mode));
    }
    const auto human = emit_report(analyze(s), ReportMode::human);
    CHECK_FALSE(human.empty());
  }
  const auto strict = nlohmann::json::parse(
      emit_report(analyze(fixture("C2MEET"), IntraRegularity::literal), ReportMode::machine));
  CHECK(strict["properties"]["intra_regular"] == false);
}
