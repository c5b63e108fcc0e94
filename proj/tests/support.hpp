#pragma once

#include <map>
#include <string>
#include <vector>

#include "lesgp/enumerate.hpp"
#include "lesgp/le_semigroup.hpp"
#include "lesgp/structure_io.hpp"
#include "oracle/naive.hpp"

namespace test_support {

inline lesgp::LeSemigroup fixture(const std::string& name) {
  return lesgp::load_structure(std::string(LESGP_FIXTURE_DIR) + "/" + name + ".lesgp");
}

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"S1", "C2MEET", "C2CONST", "C2RZ", "C3NULL"};
  return names;
}

inline oracle::Plain to_plain(const lesgp::LeSemigroup& s) {
  const int n = static_cast<int>(s.size());
  oracle::Plain p{oracle::Matrix(n, std::vector<int>(n)), oracle::Matrix(n, std::vector<int>(n))};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      p.leq[x][y] = s.lattice().order()(x, y);
      p.mul[x][y] = static_cast<int>(s.table()(x, y).index());
    }
  }
  return p;
}

inline lesgp::LeSemigroup build(const oracle::Matrix& leq, const oracle::Matrix& mul) {
  const std::size_t n = leq.size();
  lesgp::BoolMatrix order(n);
  lesgp::MultiplicationTable table(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      order(x, y) = static_cast<std::uint8_t>(leq[x][y]);
      table(x, y) = lesgp::ElementId{static_cast<std::size_t>(mul[x][y])};
    }
  }
  return lesgp::build_le_semigroup(lesgp::build_lattice(order), table);
}

/// All le-semigroups of order n up to isomorphism (cached).
inline const std::vector<lesgp::LeSemigroup>& corpus(std::size_t n) {
  static std::map<std::size_t, std::vector<lesgp::LeSemigroup>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    lesgp::EnumerationTask task;
    task.n = n;
    task.dedupe = lesgp::Dedupe::canonical;
    it = cache.emplace(n, lesgp::enumerate_le_semigroups(task)).first;
  }
  return it->second;
}

/// Corpus of every order from 1 to max_n.
inline std::vector<lesgp::LeSemigroup> corpus_up_to(std::size_t max_n) {
  std::vector<lesgp::LeSemigroup> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& c = corpus(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

inline lesgp::ElementId id(std::size_t x) { return lesgp::ElementId{x}; }

}  // namespace test_support
