#include "lesgp/structure_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "lesgp/errors.hpp"

namespace lesgp {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t tok = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > tok) line.tokens.push_back({raw.substr(tok, i - tok), tok + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {
    last_line_ = text.empty() ? 1 : static_cast<std::size_t>(
                                        std::count(text.begin(), text.end(), '\n') + 1);
  }

  StructureDocument parse() {
    StructureDocument doc;
    {
      const Line& l = next("header 'lesgp 1'");
      expect_keyword(l, "lesgp", 2);
      doc.version = static_cast<int>(integer(l, l.tokens[1]));
      if (doc.version != 1) {
        fail(ErrorKind::ParseError, "unsupported format version", l, l.tokens[1]);
      }
    }
    {
      const Line& l = next("'n <order>'");
      expect_keyword(l, "n", 2);
      doc.n = integer(l, l.tokens[1]);
      if (doc.n == 0) fail(ErrorKind::ParseError, "order must be positive", l, l.tokens[1]);
    }
    const Line* l = &next("'leq' or 'names'");
    if (l->tokens[0].text == "names") {
      if (l->tokens.size() - 1 != doc.n) {
        fail(ErrorKind::DimensionMismatch,
             "expected " + std::to_string(doc.n) + " names, got " +
                 std::to_string(l->tokens.size() - 1),
             *l, l->tokens[0]);
      }
      for (std::size_t i = 1; i < l->tokens.size(); ++i) doc.names.emplace_back(l->tokens[i].text);
      l = &next("'leq'");
    }
    expect_keyword(*l, "leq", 1);
    doc.leq = BoolMatrix(doc.n);
    read_matrix(doc.n, [&](const Line& row, const Token& tok, std::size_t i, std::size_t j) {
      const auto v = integer(row, tok);
      if (v > 1) fail(ErrorKind::ParseError, "order entries must be 0 or 1", row, tok);
      doc.leq(i, j) = static_cast<std::uint8_t>(v);
    });
    expect_keyword(next("'mul'"), "mul", 1);
    doc.mul = SquareMatrix<std::size_t>(doc.n);
    read_matrix(doc.n, [&](const Line& row, const Token& tok, std::size_t i, std::size_t j) {
      const auto v = integer(row, tok);
      if (v >= doc.n) {
        fail(ErrorKind::IndexOutOfRange,
             "product index " + std::to_string(v) + " is not below n = " + std::to_string(doc.n),
             row, tok);
      }
      doc.mul(i, j) = v;
    });
    if (pos_ < lines_.size()) {
      const Line& extra = lines_[pos_];
      fail(ErrorKind::ParseError, "unexpected trailing content", extra, extra.tokens[0]);
    }
    return doc;
  }

 private:
  [[noreturn]] static void fail(ErrorKind kind, const std::string& message, const Line& line,
                                const Token& tok) {
    throw ParseError(kind, message, line.number, tok.column);
  }

  const Line& next(const std::string& what) {
    if (pos_ >= lines_.size()) {
      throw ParseError(ErrorKind::ParseError, "unexpected end of input, expected " + what,
                       last_line_, 1);
    }
    return lines_[pos_++];
  }

  static void expect_keyword(const Line& l, std::string_view keyword, std::size_t arity) {
    if (l.tokens[0].text != keyword) {
      fail(ErrorKind::ParseError,
           "expected '" + std::string(keyword) + "', found '" + std::string(l.tokens[0].text) + "'",
           l, l.tokens[0]);
    }
    if (l.tokens.size() != arity) {
      const Token& at = l.tokens.size() > arity ? l.tokens[arity] : l.tokens.back();
      fail(ErrorKind::ParseError,
           "'" + std::string(keyword) + "' takes " + std::to_string(arity - 1) + " argument(s)",
           l, at);
    }
  }

  static std::size_t integer(const Line& l, const Token& tok) {
    std::size_t v = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
      fail(ErrorKind::ParseError, "expected a non-negative integer, found '" +
                                      std::string(tok.text) + "'",
           l, tok);
    }
    return v;
  }

  template <class Store>
  void read_matrix(std::size_t n, Store store) {
    for (std::size_t i = 0; i < n; ++i) {
      const Line& row = next("matrix row " + std::to_string(i + 1) + " of " + std::to_string(n));
      if (row.tokens.size() != n) {
        const Token& at = row.tokens.size() > n ? row.tokens[n] : row.tokens.back();
        fail(ErrorKind::DimensionMismatch,
             "row has " + std::to_string(row.tokens.size()) + " entries, expected " +
                 std::to_string(n),
             row, at);
      }
      for (std::size_t j = 0; j < n; ++j) store(row, row.tokens[j], i, j);
    }
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 1;
};

}  // namespace

StructureDocument parse_structure(std::string_view text) { return Parser(text).parse(); }

std::string serialize_structure(const StructureDocument& doc) {
  std::ostringstream out;
  out << "lesgp " << doc.version << "\n";
  out << "n " << doc.n << "\n";
  if (!doc.names.empty()) {
    out << "names";
    for (const auto& name : doc.names) out << ' ' << name;
    out << "\n";
  }
  auto rows = [&](auto cell) {
    for (std::size_t i = 0; i < doc.n; ++i) {
      for (std::size_t j = 0; j < doc.n; ++j) out << (j ? " " : "") << cell(i, j);
      out << "\n";
    }
  };
  out << "leq\n";
  rows([&](std::size_t i, std::size_t j) { return static_cast<unsigned>(doc.leq(i, j)); });
  out << "mul\n";
  rows([&](std::size_t i, std::size_t j) { return doc.mul(i, j); });
  return out.str();
}

StructureDocument to_document(const LeSemigroup& s) {
  StructureDocument doc;
  doc.n = s.size();
  doc.names = s.names();
  doc.leq = s.lattice().order();
  doc.mul = SquareMatrix<std::size_t>(doc.n);
  for (std::size_t i = 0; i < doc.n; ++i)
    for (std::size_t j = 0; j < doc.n; ++j) doc.mul(i, j) = s.table()(i, j).index();
  return doc;
}

LeSemigroup from_document(const StructureDocument& doc) {
  if (doc.leq.dim() != doc.n || doc.mul.dim() != doc.n) {
    throw Error(ErrorKind::DimensionMismatch, "document matrices do not match n");
  }
  auto lattice = build_lattice(doc.leq);
  MultiplicationTable mul(doc.n);
  for (std::size_t i = 0; i < doc.n; ++i) {
    for (std::size_t j = 0; j < doc.n; ++j) {
      if (doc.mul(i, j) >= doc.n) {
        throw Error(ErrorKind::IndexOutOfRange, "product index out of range", {i, j});
      }
      mul(i, j) = ElementId{doc.mul(i, j)};
    }
  }
  return build_le_semigroup(std::move(lattice), mul, doc.names);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LeSemigroup load_structure(const std::filesystem::path& path) {
  return from_document(parse_structure(read_text_file(path)));
}

std::vector<std::string> write_corpus(const std::filesystem::path& dir,
                                      std::span<const LeSemigroup> structures, Dedupe dedupe) {
  std::filesystem::create_directories(dir);
  std::map<std::string, CanonicalKey> owner;  // hash -> key, to catch collisions
  std::map<std::string, std::size_t> copies;
  std::vector<std::string> names;
  for (const auto& s : structures) {
    auto key = canonical_key(s);
    const std::string hash = key.hash_hex();
    auto [it, fresh] = owner.try_emplace(hash, key);
    if (!fresh && it->second != key) {
      throw Error(ErrorKind::InvalidTask, "canonical key hash collision on " + hash);
    }
    std::string name = "n" + std::to_string(s.size()) + "-" + hash;
    if (dedupe == Dedupe::labeled) {
      name += "-" + std::to_string(copies[hash]++);
    } else if (!fresh) {
      throw Error(ErrorKind::InvalidTask, "duplicate isomorphism class in canonical corpus");
    }
    name += ".lesgp";
    std::ofstream out(dir / name, std::ios::binary | std::ios::trunc);
    out << serialize_structure(to_document(s));
    if (!out) throw Error(ErrorKind::InvalidTask, "cannot write " + (dir / name).string());
    names.push_back(std::move(name));
  }
  (void)write_corpus_index(dir);
  return names;
}

CorpusIndex write_corpus_index(const std::filesystem::path& dir) {
  CorpusIndex index;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lesgp") {
      index.files.push_back(entry.path().filename().string());
    }
  }
  std::ranges::sort(index.files);
  for (const auto& f : index.files) {
    ++index.counts[parse_structure(read_text_file(dir / f)).n];
  }
  std::ofstream out(dir / "index", std::ios::binary | std::ios::trunc);
  out << "lesgp-index 1\n";
  for (const auto& [order, count] : index.counts) {
    out << "order " << order << " count " << count << "\n";
  }
  for (const auto& f : index.files) out << "file " << f << "\n";
  return index;
}

}  // namespace lesgp
