#include <random>

#include "doctest.h"
#include "lesgp/errors.hpp"
#include "lesgp/lattice.hpp"
#include "lesgp/le_semigroup.hpp"
#include "support.hpp"

using namespace lesgp;
using test_support::id;

namespace {

BoolMatrix chain(std::size_t n) {
  BoolMatrix leq(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) leq(x, y) = 1;
  return leq;
}

// 0 bottom, 1 and 2 incomparable atoms, 3 top.
BoolMatrix diamond() {
  return BoolMatrix{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
}

template <class F>
ErrorKind kind_of(F f, std::vector<std::size_t>* witness = nullptr,
                  std::optional<Side>* side = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (witness) witness->assign(e.witness().begin(), e.witness().end());
    if (side) *side = e.side();
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidTask;
}

}  // namespace

TEST_CASE("build_lattice on a two-element chain") {
  const auto lat = build_lattice(chain(2));
  CHECK(lat.size() == 2);
  CHECK(lat.top() == id(1));
  CHECK(lat.bottom() == id(0));
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) {
      CHECK(lat.meet(id(x), id(y)) == id(std::min(x, y)));
      CHECK(lat.join(id(x), id(y)) == id(std::max(x, y)));
    }
  }
}

TEST_CASE("build_lattice rejects an antichain") {
  std::vector<std::size_t> w;
  CHECK(kind_of([] { (void)build_lattice(BoolMatrix{{1, 0}, {0, 1}}); }, &w) ==
        ErrorKind::NotLattice);
  CHECK(w == std::vector<std::size_t>{0, 1});
}

TEST_CASE("diamond meets and joins agree with a brute-force scan") {
  const auto lat = build_lattice(diamond());
  CHECK(lat.meet(id(1), id(2)) == id(0));
  CHECK(lat.join(id(1), id(2)) == id(3));
  const oracle::Matrix leq{{1, 1, 1, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}};
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      CHECK(lat.meet(id(x), id(y)) == id(oracle::glb(leq, x, y)));
      CHECK(lat.join(id(x), id(y)) == id(oracle::lub(leq, x, y)));
    }
  }
  CHECK(lat.top() == id(3));
  CHECK(lat.bottom() == id(0));
}

TEST_CASE("top and bottom need not sit at the ends of the labeling") {
  // 2 < 0 < 1
  const auto lat = build_lattice(BoolMatrix{{1, 1, 0}, {0, 1, 0}, {1, 1, 1}});
  CHECK(lat.top() == id(1));
  CHECK(lat.bottom() == id(2));
}

TEST_CASE("partial-order failures carry witnesses") {
  std::vector<std::size_t> w;
  CHECK(kind_of([] { (void)build_lattice(BoolMatrix{{1, 1}, {0, 0}}); }, &w) ==
        ErrorKind::NotPartialOrder);
  CHECK(w == std::vector<std::size_t>{1});

  CHECK(kind_of([] { (void)build_lattice(BoolMatrix{{1, 1}, {1, 1}}); }, &w) ==
        ErrorKind::NotPartialOrder);
  CHECK(w == std::vector<std::size_t>{0, 1});

  // 0 <= 1 <= 2 but not 0 <= 2
  CHECK(kind_of([] { (void)build_lattice(BoolMatrix{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}); }, &w) ==
        ErrorKind::NotPartialOrder);
  CHECK(w == std::vector<std::size_t>{0, 1, 2});

  CHECK(kind_of([] { (void)build_lattice(BoolMatrix(0)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { (void)build_lattice(BoolMatrix{{1, 2}, {0, 1}}); }) ==
        ErrorKind::IndexOutOfRange);
}

TEST_CASE("order cap") {
  CHECK(kind_of([] { (void)build_lattice(chain(13)); }) == ErrorKind::OrderTooLarge);
  CHECK_NOTHROW((void)build_lattice(chain(12)));
}

TEST_CASE("C2MEET is a valid le-semigroup") {
  const auto s = build_le_semigroup(build_lattice(chain(2)), MultiplicationTable{{0, 0}, {0, 1}});
  CHECK(oracle::is_le_semigroup(test_support::to_plain(s)));
  CHECK(product(s, id(0), id(1)) == id(0));
}

TEST_CASE("xor table on the two-chain is rejected as incompatible") {
  // Associative (it is a group) but 0 <= 1 while 1*0 = 1 > 0 = 1*1.
  std::vector<std::size_t> w;
  std::optional<Side> side;
  CHECK(kind_of(
            [] {
              (void)build_le_semigroup(build_lattice(chain(2)),
                                       MultiplicationTable{{0, 1}, {1, 0}});
            },
            &w, &side) == ErrorKind::NotCompatible);
  CHECK(w == std::vector<std::size_t>{0, 1, 1});
  CHECK(side == Side::left);
}

TEST_CASE("first monotone non-associative table on the three-chain") {
  // Scan every table on the 3-chain in lexicographic order; the first that is
  // monotone on both sides but not associative.
  const oracle::Matrix leq{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
  std::optional<oracle::Matrix> first;
  std::vector<int> d(9, 0);
  while (!first) {
    oracle::Matrix m(3, std::vector<int>(3));
    for (int k = 0; k < 9; ++k) m[k / 3][k % 3] = d[k];
    bool mono = true, assoc = true;
    for (int x = 0; x < 3; ++x)
      for (int a = 0; a < 3; ++a)
        for (int b = a; b < 3; ++b) mono = mono && m[x][a] <= m[x][b] && m[a][x] <= m[b][x];
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y)
        for (int z = 0; z < 3; ++z) assoc = assoc && m[m[x][y]][z] == m[x][m[y][z]];
    if (mono && !assoc) first = m;
    int k = 8;
    while (k >= 0 && d[k] == 2) d[k--] = 0;
    REQUIRE(k >= 0);
    ++d[k];
  }
  CHECK(*first == oracle::Matrix{{0, 0, 0}, {0, 0, 0}, {0, 1, 1}});

  std::vector<std::size_t> w;
  CHECK(kind_of(
            [] {
              (void)build_le_semigroup(build_lattice(chain(3)),
                                       MultiplicationTable{{0, 0, 0}, {0, 0, 0}, {0, 1, 1}});
            },
            &w) == ErrorKind::NotAssociative);
  CHECK(w == std::vector<std::size_t>{2, 2, 1});
}

TEST_CASE("monotone but not join-preserving multiplication is rejected") {
  // x*y = f(y) with f collapsing both atoms of the diamond to the bottom.
  std::vector<std::size_t> w;
  std::optional<Side> side;
  CHECK(kind_of(
            [] {
              (void)build_le_semigroup(
                  build_lattice(diamond()),
                  MultiplicationTable{{0, 0, 0, 3}, {0, 0, 0, 3}, {0, 0, 0, 3}, {0, 0, 0, 3}});
            },
            &w, &side) == ErrorKind::NotDistributive);
  CHECK(w == std::vector<std::size_t>{0, 1, 2});
  CHECK(side == Side::left);
}

TEST_CASE("table shape and index errors") {
  CHECK(kind_of([] {
          (void)build_le_semigroup(build_lattice(chain(2)), MultiplicationTable{{0, 2}, {0, 1}});
        }) == ErrorKind::IndexOutOfRange);
  CHECK(kind_of([] {
          (void)build_le_semigroup(build_lattice(chain(2)), MultiplicationTable{{0}});
        }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] {
          (void)build_le_semigroup(build_lattice(chain(2)),
                                   MultiplicationTable{{0, 0}, {0, 1}}, {"a"});
        }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("fixture products") {
  CHECK(product(test_support::fixture("C2MEET"), id(0), id(1)) == id(0));
  CHECK(product(test_support::fixture("C2CONST"), id(0), id(0)) == id(1));
  for (const auto& name : test_support::fixture_names()) {
    const auto s = test_support::fixture(name);
    CHECK(s.leq(product(s, s.top(), s.top()), s.top()));
  }
}

TEST_CASE("validated structures satisfy the axioms (corpus n <= 4)") {
  for (const auto& s : test_support::corpus_up_to(4)) {
    const auto e = s.top();
    for (auto x : s.elements()) {
      CHECK(s.leq(x, e));
      for (auto y : s.elements()) {
        for (auto z : s.elements()) {
          REQUIRE(s(x, s.join(y, z)) == s.join(s(x, y), s(x, z)));
          REQUIRE(s(s.join(y, z), x) == s.join(s(y, x), s(z, x)));
          if (s.leq(y, z)) {
            REQUIRE(s.leq(s(x, y), s(x, z)));
            REQUIRE(s.leq(s(y, x), s(z, x)));
          }
        }
      }
    }
  }
}

TEST_CASE("build_lattice of an extracted order is the identity") {
  for (const auto& s : test_support::corpus_up_to(4)) {
    const auto again = build_lattice(s.lattice().order());
    CHECK(again.order() == s.lattice().order());
    CHECK(again.meet_table() == s.lattice().meet_table());
    CHECK(again.join_table() == s.lattice().join_table());
    CHECK(again.top() == s.top());
    CHECK(again.bottom() == s.bottom());
  }
}

TEST_CASE("relabel produces a valid isomorphic copy") {
  std::mt19937 rng(7);
  for (const auto& s : test_support::corpus(3)) {
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto r = relabel(s, perm);
    for (auto x : s.elements()) {
      for (auto y : s.elements()) {
        CHECK(r(id(perm[x.index()]), id(perm[y.index()])) == id(perm[s(x, y).index()]));
      }
    }
    CHECK(r.top() == id(perm[s.top().index()]));
  }
  CHECK_THROWS_AS((void)relabel(test_support::fixture("C2MEET"), std::vector<std::size_t>{0, 0}),
                  Error);
}
