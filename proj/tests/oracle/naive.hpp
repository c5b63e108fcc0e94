#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library: structures are plain nested vectors and every check
// is a direct scan of the defining condition.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

struct Plain {
  Matrix leq;  // leq[x][y] == 1 iff x <= y
  Matrix mul;
};

inline bool is_partial_order(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  for (int x = 0; x < n; ++x) {
    if (!leq[x][x]) return false;
    for (int y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) return false;
      for (int z = 0; z < n; ++z) {
        if (leq[x][y] && leq[y][z] && !leq[x][z]) return false;
      }
    }
  }
  return true;
}

// Least upper bound by scanning all upper bounds, or -1.
inline int lub(const Matrix& leq, int x, int y) {
  const int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    if (!leq[x][c] || !leq[y][c]) continue;
    bool least = true;
    for (int d = 0; d < n; ++d) {
      if (leq[x][d] && leq[y][d] && !leq[c][d]) least = false;
    }
    if (least) return c;
  }
  return -1;
}

inline int glb(const Matrix& leq, int x, int y) {
  const int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    if (!leq[c][x] || !leq[c][y]) continue;
    bool greatest = true;
    for (int d = 0; d < n; ++d) {
      if (leq[d][x] && leq[d][y] && !leq[d][c]) greatest = false;
    }
    if (greatest) return c;
  }
  return -1;
}

inline bool is_lattice(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (lub(leq, x, y) < 0 || glb(leq, x, y) < 0) return false;
  return true;
}

/// Full axiom scan: lattice order, associativity, two-sided distributivity
/// over joins and two-sided monotonicity.
inline bool is_le_semigroup(const Plain& s) {
  const auto& leq = s.leq;
  const auto& m = s.mul;
  const int n = static_cast<int>(leq.size());
  if (n == 0 || !is_partial_order(leq) || !is_lattice(leq)) return false;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (m[x][y] < 0 || m[x][y] >= n) return false;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (m[m[x][y]][z] != m[x][m[y][z]]) return false;
        const int j = lub(leq, y, z);
        if (m[x][j] != lub(leq, m[x][y], m[x][z])) return false;
        if (m[j][x] != lub(leq, m[y][x], m[z][x])) return false;
        if (leq[y][z] && (!leq[m[x][y]][m[x][z]] || !leq[m[y][x]][m[z][x]])) return false;
      }
    }
  }
  return true;
}

inline int top(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  for (int c = 0; c < n; ++c) {
    bool all = true;
    for (int d = 0; d < n; ++d) all = all && leq[d][c];
    if (all) return c;
  }
  return -1;
}

inline bool is_ideal(const Plain& s, int t) {
  const int e = top(s.leq);
  return s.leq[s.mul[e][t]][t] && s.leq[s.mul[t][e]][t];
}

/// The least ideal element above x, found by scanning every ideal element.
inline int min_ideal_above(const Plain& s, int x) {
  const int n = static_cast<int>(s.leq.size());
  std::vector<int> above;
  for (int t = 0; t < n; ++t) {
    if (is_ideal(s, t) && s.leq[x][t]) above.push_back(t);
  }
  for (int c : above) {
    if (std::all_of(above.begin(), above.end(), [&](int d) { return s.leq[c][d]; })) return c;
  }
  return -1;
}

/// Encoding of (leq, mul) after relabeling x -> perm[x].
inline std::vector<int> encode(const Plain& s, const std::vector<int>& perm, bool with_mul) {
  const int n = static_cast<int>(s.leq.size());
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[perm[x]] = x;
  std::vector<int> code;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) code.push_back(s.leq[inv[i]][inv[j]]);
  if (with_mul) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) code.push_back(perm[s.mul[inv[i]][inv[j]]]);
  }
  return code;
}

/// Minimum encoding over all n! relabelings.
inline std::vector<int> brute_canonical(const Plain& s, bool with_mul) {
  const int n = static_cast<int>(s.leq.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::vector<int>> best;
  do {
    auto code = encode(s, perm, with_mul);
    if (!best || code < *best) best = std::move(code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}


/// One order matrix per isomorphism class of n-element lattices (the first
/// relation met in bit order).
inline std::vector<Matrix> lattice_representatives(int n) {
  std::vector<std::pair<int, int>> off;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::set<std::vector<int>> classes;
  std::vector<Matrix> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off.size()); ++bits) {
    Plain p{Matrix(n, std::vector<int>(n, 0)), {}};
    for (int i = 0; i < n; ++i) p.leq[i][i] = 1;
    for (std::size_t k = 0; k < off.size(); ++k) {
      if (bits >> k & 1) p.leq[off[k].first][off[k].second] = 1;
    }
    if (!is_partial_order(p.leq) || !is_lattice(p.leq)) continue;
    if (classes.insert(brute_canonical(p, false)).second) out.push_back(p.leq);
  }
  return out;
}

/// Number of isomorphism classes of n-element lattices, by filtering every
/// reflexive relation on n points.
inline std::size_t lattice_count(int n) { return lattice_representatives(n).size(); }

/// Every table on a fixed order that passes is_le_semigroup, in
/// lexicographic row-major order (n^(n*n) candidates).
inline std::vector<Matrix> all_tables(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  const int cells = n * n;
  std::vector<int> digits(cells, 0);
  std::vector<Matrix> out;
  while (true) {
    Plain p{leq, Matrix(n, std::vector<int>(n))};
    for (int k = 0; k < cells; ++k) p.mul[k / n][k % n] = digits[k];
    if (is_le_semigroup(p)) out.push_back(p.mul);
    int k = cells - 1;
    while (k >= 0 && digits[k] == n - 1) digits[k--] = 0;
    if (k < 0) break;
    ++digits[k];
  }
  return out;
}

/// Join-preserving self-maps f of the order (f(y v z) = f(y) v f(z)).
inline std::vector<std::vector<int>> join_endomorphisms(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    bool ok = true;
    for (int y = 0; y < n && ok; ++y)
      for (int z = 0; z < n && ok; ++z) ok = f[lub(leq, y, z)] == lub(leq, f[y], f[z]);
    if (ok) out.push_back(f);
    int k = n - 1;
    while (k >= 0 && f[k] == n - 1) f[k--] = 0;
    if (k < 0) break;
    ++f[k];
  }
  return out;
}

/// Tables whose rows and columns are all join endomorphisms and which are
/// associative. Rows are drawn from the endomorphism list, which makes n = 4
/// tractable. Equivalent to all_tables by the distributivity axiom.
inline std::vector<Matrix> tables_by_rows(const Matrix& leq) {
  const int n = static_cast<int>(leq.size());
  const auto endos = join_endomorphisms(leq);
  std::vector<Matrix> out;
  std::vector<std::size_t> pick(n, 0);
  while (true) {
    Plain p{leq, Matrix(n)};
    for (int x = 0; x < n; ++x) p.mul[x] = endos[pick[x]];
    if (is_le_semigroup(p)) out.push_back(p.mul);
    int k = n - 1;
    while (k >= 0 && pick[k] == endos.size() - 1) pick[k--] = 0;
    if (k < 0) break;
    ++pick[k];
  }
  return out;
}

/// Isomorphism classes of le-semigroups of order n: rows-based table search
/// on every lattice representative, deduplicated by brute-force relabeling.
inline std::size_t le_semigroup_class_count(int n) {
  std::set<std::vector<int>> classes;
  for (const auto& leq : lattice_representatives(n)) {
    for (const auto& mul : tables_by_rows(leq)) classes.insert(brute_canonical({leq, mul}, true));
  }
  return classes.size();
}

}  // namespace oracle
