#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <numeric>
#include <optional>

#include "lesgp/enumerate.hpp"

namespace lesgp {
namespace {

using Colors = std::vector<std::uint32_t>;

// Colored individualization-refinement over (leq, optional mul). Colors are
// ranks of label-independent signatures, so every step commutes with
// relabeling and the minimum leaf code is an isomorphism invariant.
class Canonizer {
 public:
  Canonizer(const BoolMatrix& leq, const IndexMatrix* mul)
      : leq_(leq), mul_(mul), n_(leq.dim()) {}

  std::pair<std::vector<std::size_t>, std::vector<std::uint8_t>> run() {
    Colors initial(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      std::uint32_t below = 0;
      for (std::size_t y = 0; y < n_; ++y) below += leq_(y, x) ? 1 : 0;
      initial[x] = below;
    }
    search(rank(initial, [&](std::size_t x) { return std::vector{initial[x]}; }));
    return {best_perm_, *best_code_};
  }

 private:
  template <class Sig>
  Colors rank(const Colors& colors, Sig signature) const {
    std::vector<std::vector<std::uint32_t>> sigs(n_);
    for (std::size_t x = 0; x < n_; ++x) sigs[x] = signature(x);
    auto sorted = sigs;
    std::ranges::sort(sorted);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Colors out(colors.size());
    for (std::size_t x = 0; x < n_; ++x) {
      out[x] = static_cast<std::uint32_t>(
          std::ranges::lower_bound(sorted, sigs[x]) - sorted.begin());
    }
    return out;
  }

  static std::size_t distinct(const Colors& c) {
    return c.empty() ? 0 : *std::ranges::max_element(c) + 1;
  }

  Colors refine(Colors colors) const {
    while (true) {
      const std::size_t before = distinct(colors);
      auto next = rank(colors, [&](std::size_t x) {
        std::vector<std::array<std::uint32_t, 9>> rows(n_);
        for (std::size_t y = 0; y < n_; ++y) {
          auto& r = rows[y];
          r = {colors[y], leq_(x, y), leq_(y, x), 0, 0, 0, 0, 0, 0};
          if (mul_ != nullptr) {
            const auto xy = (*mul_)(x, y).index();
            const auto yx = (*mul_)(y, x).index();
            r[3] = colors[xy];
            r[4] = colors[yx];
            r[5] = xy == x;
            r[6] = xy == y;
            r[7] = yx == x;
            r[8] = yx == y;
          }
        }
        std::ranges::sort(rows);
        std::vector<std::uint32_t> sig{colors[x]};
        for (const auto& r : rows) sig.insert(sig.end(), r.begin(), r.end());
        return sig;
      });
      if (distinct(next) == before) return next;
      colors = std::move(next);
    }
  }

  void search(Colors colors) {
    colors = refine(std::move(colors));
    const std::size_t k = distinct(colors);
    if (k == n_) {
      consider(colors);
      return;
    }
    // First (lowest) color shared by several elements.
    std::vector<std::size_t> count(k, 0);
    for (auto c : colors) ++count[c];
    std::uint32_t target = 0;
    while (count[target] < 2) ++target;
    for (std::size_t v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      Colors split(n_);
      for (std::size_t z = 0; z < n_; ++z) {
        split[z] = 2 * colors[z] + ((colors[z] == target && z != v) ? 1 : 0);
      }
      search(rank(split, [&](std::size_t z) { return std::vector{split[z]}; }));
    }
  }

  void consider(const Colors& perm) {
    std::vector<std::size_t> inv(n_);
    for (std::size_t x = 0; x < n_; ++x) inv[perm[x]] = x;
    std::vector<std::uint8_t> code;
    code.reserve(1 + 2 * n_ * n_);
    code.push_back(static_cast<std::uint8_t>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) code.push_back(leq_(inv[i], inv[j]));
    }
    if (mul_ != nullptr) {
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          code.push_back(static_cast<std::uint8_t>(perm[(*mul_)(inv[i], inv[j]).index()]));
        }
      }
    }
    if (!best_code_ || code < *best_code_) {
      best_code_ = std::move(code);
      best_perm_.assign(perm.begin(), perm.end());
    }
  }

  const BoolMatrix& leq_;
  const IndexMatrix* mul_;
  std::size_t n_;
  std::optional<std::vector<std::uint8_t>> best_code_;
  std::vector<std::size_t> best_perm_;
};

}  // namespace

std::string CanonicalKey::hash_hex() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (auto b : bytes_) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CanonicalKey canonical_key(const LeSemigroup& s) {
  return CanonicalKey(Canonizer(s.lattice().order(), &s.table()).run().second);
}

CanonicalKey canonical_key(const FiniteLattice& lattice) {
  return CanonicalKey(Canonizer(lattice.order(), nullptr).run().second);
}

std::vector<std::size_t> canonical_labeling(const LeSemigroup& s) {
  return Canonizer(s.lattice().order(), &s.table()).run().first;
}

std::vector<std::size_t> canonical_labeling(const FiniteLattice& lattice) {
  return Canonizer(lattice.order(), nullptr).run().first;
}

}  // namespace lesgp
