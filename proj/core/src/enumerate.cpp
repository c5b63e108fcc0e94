#include "lesgp/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <set>
#include <string>
#include <thread>

#include "lesgp/config.hpp"
#include "lesgp/decomposition.hpp"
#include "lesgp/errors.hpp"
#include "lesgp/green.hpp"
#include "lesgp/ideals.hpp"

namespace lesgp {
namespace {

constexpr std::array<std::string_view, 13> kVocabulary{
    "regular",
    "intra-regular",
    "semisimple",
    "left-simple",
    "lambda",
    "commutative",
    "ideals-semiprime",
    "green-fails-somewhere",
    "class-not-subsemigroup",
    "green-class-not-subsemigroup",
    "subgroup-class",
    "decomposes",
    "violation",
};

void check_order(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidTask, "order must be at least 1");
  if (n > max_enumeration_order()) {
    throw Error(ErrorKind::OrderTooLarge,
                "order " + std::to_string(n) + " exceeds the enumeration cap of " +
                    std::to_string(max_enumeration_order()));
  }
}

// Partial orders whose labeling is a linear extension (x <= y implies
// x <= y as integers). Cells above the diagonal are decided column by column,
// rows descending, so when (i, j) is decided every (i, m) and (m, j) with
// i < m < j is known; those are exactly the transitivity obligations on i <= j.
void naturally_labeled_posets(std::size_t n,
                              const std::function<void(const BoolMatrix&)>& emit) {
  BoolMatrix leq(n);
  for (std::size_t i = 0; i < n; ++i) leq(i, i) = 1;
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) cells.emplace_back(i, j);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      emit(leq);
      return;
    }
    const auto [i, j] = cells[k];
    bool forced = false;
    for (std::size_t m = i + 1; m < j && !forced; ++m) forced = leq(i, m) && leq(m, j);
    if (!forced) {
      leq(i, j) = 0;
      rec(k + 1);
    }
    leq(i, j) = 1;
    rec(k + 1);
    leq(i, j) = 0;
  };
  rec(0);
}

bool is_lattice(const BoolMatrix& leq) {
  const std::size_t n = leq.dim();
  auto has_extremum = [&](std::size_t x, std::size_t y, bool upper) {
    for (std::size_t c = 0; c < n; ++c) {
      const bool bound = upper ? (leq(x, c) && leq(y, c)) : (leq(c, x) && leq(c, y));
      if (!bound) continue;
      bool best = true;
      for (std::size_t d = 0; d < n && best; ++d) {
        const bool other = upper ? (leq(x, d) && leq(y, d)) : (leq(d, x) && leq(d, y));
        if (other && !(upper ? leq(c, d) : leq(d, c))) best = false;
      }
      if (best) return true;
    }
    return false;
  };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!has_extremum(x, y, true) || !has_extremum(x, y, false)) return false;
    }
  }
  return true;
}

// Backtracking fill of a multiplication table over a fixed lattice. Cells are
// assigned row-major; after each assignment every associativity, distributivity
// and monotonicity instance that involves the new cell and is fully assigned
// is checked.
class TableSearch {
 public:
  explicit TableSearch(const FiniteLattice& lattice)
      : n_(lattice.size()), leq_(n_ * n_), join_(n_ * n_), mul_(n_ * n_, -1) {
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = 0; y < n_; ++y) {
        leq_[x * n_ + y] = lattice.leq(ElementId{x}, ElementId{y});
        join_[x * n_ + y] = static_cast<int>(lattice.join(ElementId{x}, ElementId{y}).index());
      }
    }
  }

  [[nodiscard]] std::size_t cells() const noexcept { return n_ * n_; }

  /// Visits every consistent assignment of cells [0, depth) extending
  /// `prefix`, in lexicographic order. `visit` returns false to stop.
  /// Returns false if stopped early.
  bool run(std::span<const int> prefix, std::size_t depth,
           const std::function<bool(std::span<const int>)>& visit) {
    std::fill(mul_.begin(), mul_.end(), -1);
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      mul_[k] = prefix[k];
      if (!consistent(k)) return true;
    }
    depth_ = depth;
    visit_ = &visit;
    return descend(prefix.size());
  }

 private:
  int m(std::size_t x, std::size_t y) const { return mul_[x * n_ + y]; }
  bool le(int x, int y) const { return leq_[static_cast<std::size_t>(x) * n_ + y]; }
  int jn(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }

  bool descend(std::size_t k) {
    if (k == depth_) return (*visit_)(std::span<const int>(mul_.data(), depth_));
    for (int v = 0; v < static_cast<int>(n_); ++v) {
      mul_[k] = v;
      if (consistent(k) && !descend(k + 1)) {
        mul_[k] = -1;
        return false;
      }
    }
    mul_[k] = -1;
    return true;
  }

  // (xy)z = x(yz) unless some needed cell is still open.
  bool triple_ok(std::size_t x, std::size_t y, std::size_t z) const {
    const int xy = m(x, y);
    const int yz = m(y, z);
    if (xy < 0 || yz < 0) return true;
    const int lhs = m(xy, z);
    const int rhs = m(x, yz);
    return lhs < 0 || rhs < 0 || lhs == rhs;
  }

  bool consistent(std::size_t cell) const {
    const std::size_t a = cell / n_;
    const std::size_t b = cell % n_;
    const int v = m(a, b);

    for (std::size_t c = 0; c < n_; ++c) {
      const int row = m(a, c);
      if (row >= 0) {
        if (le(c, b) && !le(row, v)) return false;
        if (le(b, c) && !le(v, row)) return false;
      }
      const int col = m(c, b);
      if (col >= 0) {
        if (le(c, a) && !le(col, v)) return false;
        if (le(a, c) && !le(v, col)) return false;
      }
    }

    for (std::size_t y = 0; y < n_; ++y) {
      for (std::size_t z = 0; z < n_; ++z) {
        const std::size_t yz = jn(y, z);
        if (y == b || z == b || yz == b) {
          const int p = m(a, y), q = m(a, z), r = m(a, yz);
          if (p >= 0 && q >= 0 && r >= 0 && r != jn(p, q)) return false;
        }
        if (y == a || z == a || yz == a) {
          const int p = m(y, b), q = m(z, b), r = m(yz, b);
          if (p >= 0 && q >= 0 && r >= 0 && r != jn(p, q)) return false;
        }
      }
    }

    for (std::size_t w = 0; w < n_; ++w) {
      if (!triple_ok(a, b, w) || !triple_ok(w, a, b)) return false;
      for (std::size_t u = 0; u < n_; ++u) {
        if (m(w, u) == static_cast<int>(a) && !triple_ok(w, u, b)) return false;
        if (m(w, u) == static_cast<int>(b) && !triple_ok(a, w, u)) return false;
      }
    }
    return true;
  }

  std::size_t n_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> join_;
  std::vector<int> mul_;
  std::size_t depth_ = 0;
  const std::function<bool(std::span<const int>)>* visit_ = nullptr;
};

struct WorkUnit {
  std::size_t lattice;
  std::vector<int> prefix;
};

struct Found {
  LeSemigroup structure;
  CanonicalKey key;  // empty under labeled dedupe
};

void validate_task(const EnumerationTask& task) {
  check_order(task.n);
  auto known = [](const std::string& name) {
    return std::ranges::find(kVocabulary, std::string_view(name)) != kVocabulary.end();
  };
  for (const auto* list : {&task.require, &task.forbid}) {
    for (const auto& name : *list) {
      if (!known(name)) {
        throw Error(ErrorKind::UnknownConstraint, "unknown property '" + name + "'");
      }
    }
  }
  for (const auto& name : task.require) {
    if (std::ranges::find(task.forbid, name) != task.forbid.end()) {
      throw Error(ErrorKind::InvalidTask, "property '" + name + "' is both required and forbidden");
    }
  }
}

bool satisfies(const LeSemigroup& s, const EnumerationTask& task) {
  return std::ranges::all_of(task.require, [&](const auto& p) { return evaluate_property(s, p); }) &&
         std::ranges::none_of(task.forbid, [&](const auto& p) { return evaluate_property(s, p); });
}

LeSemigroup materialize(const FiniteLattice& lattice, std::span<const int> cells) {
  const std::size_t n = lattice.size();
  MultiplicationTable mul(n);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    mul(k / n, k % n) = ElementId{static_cast<std::size_t>(cells[k])};
  }
  return build_le_semigroup(lattice, mul);
}

// Applies dedupe, constraints and the limit to candidates in enumeration
// order. accept() returns false once the limit is reached.
class Collector {
 public:
  Collector(const EnumerationTask& task, std::vector<LeSemigroup>& out)
      : task_(task), out_(out) {}

  bool accept(Found f) {
    if (task_.dedupe == Dedupe::canonical && !seen_.insert(f.key).second) return true;
    if (!satisfies(f.structure, task_)) return true;
    out_.push_back(std::move(f.structure));
    return !task_.limit || out_.size() < *task_.limit;
  }

 private:
  const EnumerationTask& task_;
  std::vector<LeSemigroup>& out_;
  std::set<CanonicalKey> seen_;
};

Found make_found(const FiniteLattice& lattice, std::span<const int> cells, Dedupe dedupe) {
  auto s = materialize(lattice, cells);
  CanonicalKey key = dedupe == Dedupe::canonical ? canonical_key(s) : CanonicalKey{};
  return Found{std::move(s), std::move(key)};
}

std::vector<LeSemigroup> run_enumeration(const EnumerationTask& task,
                                         const EnumerationOptions& options) {
  const auto lattices = enumerate_lattices(task.n);
  std::vector<LeSemigroup> out;
  Collector collector(task, out);
  if (task.limit && *task.limit == 0) return out;

  if (options.jobs <= 1) {
    for (const auto& lattice : lattices) {
      TableSearch search(lattice);
      const bool more = search.run({}, search.cells(), [&](std::span<const int> cells) {
        return collector.accept(make_found(lattice, cells, task.dedupe));
      });
      if (!more) break;
    }
    return out;
  }

  std::vector<WorkUnit> units;
  for (std::size_t li = 0; li < lattices.size(); ++li) {
    TableSearch search(lattices[li]);
    const std::size_t depth =
        std::min(options.split_depth == 0 ? task.n : options.split_depth, search.cells());
    (void)search.run({}, depth, [&](std::span<const int> cells) {
      units.push_back({li, std::vector<int>(cells.begin(), cells.end())});
      return true;
    });
  }

  std::vector<std::vector<Found>> results(units.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t u = next++; u < units.size(); u = next++) {
      const auto& lattice = lattices[units[u].lattice];
      TableSearch search(lattice);
      (void)search.run(units[u].prefix, search.cells(), [&](std::span<const int> cells) {
        results[u].push_back(make_found(lattice, cells, task.dedupe));
        return true;
      });
    }
  };
  std::vector<std::jthread> pool;
  for (std::size_t j = 0; j < options.jobs; ++j) pool.emplace_back(worker);
  pool.clear();

  for (auto& unit : results) {
    for (auto& f : unit) {
      if (!collector.accept(std::move(f))) return out;
    }
  }
  return out;
}

}  // namespace

std::span<const std::string_view> property_vocabulary() noexcept { return kVocabulary; }

bool evaluate_property(const LeSemigroup& s, std::string_view name) {
  auto classes = [&] { return j_classes(s).classes; };
  if (name == "regular") return structure_flags(s).regular;
  if (name == "intra-regular") return structure_flags(s).intra_regular;
  if (name == "semisimple") return structure_flags(s).semisimple;
  if (name == "left-simple") return structure_flags(s).left_simple;
  if (name == "lambda") return structure_flags(s).lambda;
  if (name == "commutative") {
    for (auto x : s.elements())
      for (auto y : s.elements())
        if (s(x, y) != s(y, x)) return false;
    return true;
  }
  if (name == "ideals-semiprime") {
    const auto ideals = structure_flags(s).ideal_elements;
    return std::ranges::all_of(ideals, [&](ElementId t) { return is_semiprime(s, t).semiprime; });
  }
  if (name == "green-fails-somewhere") {
    return std::ranges::any_of(classes(), [](const JClass& c) { return !c.green.holds; });
  }
  if (name == "class-not-subsemigroup") {
    return std::ranges::any_of(classes(), [](const JClass& c) { return !c.subsemigroup.closed; });
  }
  if (name == "green-class-not-subsemigroup") {
    return std::ranges::any_of(classes(), [](const JClass& c) {
      return c.green.holds && !c.subsemigroup.closed;
    });
  }
  if (name == "subgroup-class") {
    return std::ranges::any_of(classes(), [](const JClass& c) { return c.subgroup.group; });
  }
  if (name == "decomposes") return check_decomposition(s).passes();
  if (name == "violation") return !violation_free(check_all(s));
  throw Error(ErrorKind::UnknownConstraint, "unknown property '" + std::string(name) + "'");
}

std::vector<FiniteLattice> enumerate_lattices(std::size_t n) {
  check_order(n);
  std::set<CanonicalKey> seen;
  std::vector<std::pair<CanonicalKey, FiniteLattice>> found;
  naturally_labeled_posets(n, [&](const BoolMatrix& leq) {
    if (!is_lattice(leq)) return;
    const FiniteLattice lattice = build_lattice(leq);
    auto key = canonical_key(lattice);
    if (!seen.insert(key).second) return;
    const auto perm = canonical_labeling(lattice);
    BoolMatrix relabeled(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) relabeled(perm[x], perm[y]) = leq(x, y);
    found.emplace_back(std::move(key), build_lattice(relabeled));
  });
  std::ranges::sort(found, std::greater<>{}, &std::pair<CanonicalKey, FiniteLattice>::first);
  std::vector<FiniteLattice> out;
  out.reserve(found.size());
  for (auto& [key, lattice] : found) out.push_back(std::move(lattice));
  return out;
}

std::vector<LeSemigroup> enumerate_le_semigroups(const EnumerationTask& task,
                                                 const EnumerationOptions& options) {
  validate_task(task);
  return run_enumeration(task, options);
}

std::vector<LeSemigroup> hunt(const EnumerationTask& task, const EnumerationOptions& options) {
  validate_task(task);
  return run_enumeration(task, options);
}

}  // namespace lesgp
