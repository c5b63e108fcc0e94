#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lesgp/element.hpp"
#include "lesgp/enumerate.hpp"
#include "lesgp/le_semigroup.hpp"

namespace lesgp {

/// Parsed contents of a structure file, before any algebraic validation.
///
///     lesgp 1
///     n 2
///     names a b        (optional)
///     leq
///     1 1
///     0 1
///     mul
///     0 0
///     0 1
///
/// `#` starts a comment; blank lines are ignored.
struct StructureDocument {
  int version = 1;
  std::size_t n = 0;
  std::vector<std::string> names;
  BoolMatrix leq;
  SquareMatrix<std::size_t> mul;

  bool operator==(const StructureDocument&) const = default;
};

/// Throws ParseError with kind ParseError, DimensionMismatch or
/// IndexOutOfRange and the 1-based position of the offending token.
[[nodiscard]] StructureDocument parse_structure(std::string_view text);

/// Canonical text: fixed field order, single spaces, trailing newline.
[[nodiscard]] std::string serialize_structure(const StructureDocument& doc);

[[nodiscard]] StructureDocument to_document(const LeSemigroup& s);

/// Runs full lattice and le-semigroup validation.
[[nodiscard]] LeSemigroup from_document(const StructureDocument& doc);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
[[nodiscard]] LeSemigroup load_structure(const std::filesystem::path& path);

struct CorpusIndex {
  std::map<std::size_t, std::size_t> counts;  // order -> number of files
  std::vector<std::string> files;             // sorted
};

/// Writes one file per structure into `dir` (created if needed), named
/// "n<order>-<canonical hash>.lesgp"; under labeled dedupe isomorphic copies
/// get a "-<k>" suffix. Then rebuilds the index (see write_corpus_index).
/// Returns the names written, in input order.
std::vector<std::string> write_corpus(const std::filesystem::path& dir,
                                      std::span<const LeSemigroup> structures,
                                      Dedupe dedupe);

/// Scans every *.lesgp file in `dir` and writes `dir/index`:
///
///     lesgp-index 1
///     order 2 count 6
///     file n2-....lesgp
[[nodiscard]] CorpusIndex write_corpus_index(const std::filesystem::path& dir);

}  // namespace lesgp
