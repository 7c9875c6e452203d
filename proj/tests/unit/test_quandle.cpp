#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "qder/quandle.hpp"

using namespace qder;

namespace {

// Independent axiom-III check on a raw table.
bool self_distributive(const CayleyTable& t) {
  const auto n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t[t[x][y]][z] != t[t[x][z]][t[y][z]]) return false;
  return true;
}

bool columns_are_permutations(const CayleyTable& t) {
  const auto n = t.size();
  for (std::size_t y = 0; y < n; ++y) {
    std::vector<int> hits(n, 0);
    for (std::size_t x = 0; x < n; ++x) ++hits[t[x][y]];
    for (int h : hits)
      if (h != 1) return false;
  }
  return true;
}

// First 3×3 table in lexicographic order with idempotent diagonal and
// permutation columns that is not self-distributive.
CayleyTable search_axiom_three_counterexample() {
  for (int code = 0; code < 729; ++code) {
    CayleyTable t(3, std::vector<Element>(3));
    int c = code;
    for (Element x = 0; x < 3; ++x)
      for (Element y = 0; y < 3; ++y) {
        if (x == y) {
          t[x][y] = x;
        } else {
          t[x][y] = static_cast<Element>(c % 3);
          c /= 3;
        }
      }
    if (columns_are_permutations(t) && !self_distributive(t)) return t;
  }
  return {};
}

}  // namespace

TEST_CASE("validate") {
  CHECK_FALSE(check_axioms({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));

  auto v = check_axioms({{1, 0}, {0, 1}});
  REQUIRE(v);
  CHECK(v->axiom_name() == "I");
  CHECK(v->witness == std::vector<Element>{0});

  auto col = check_axioms({{0, 0}, {0, 1}});
  REQUIRE(col);
  CHECK(col->axiom_name() == "II");
  CHECK(col->witness == std::vector<Element>{0});

  auto bad = search_axiom_three_counterexample();
  REQUIRE(bad.size() == 3);
  auto w = check_axioms(bad);
  REQUIRE(w);
  CHECK(w->axiom_name() == "III");
  REQUIRE(w->witness.size() == 3);
  auto [x, y, z] = std::array{w->witness[0], w->witness[1], w->witness[2]};
  CHECK(bad[bad[x][y]][z] != bad[bad[x][z]][bad[y][z]]);
  CHECK_THROWS_AS(Quandle::from_table(bad), QuandleError);

  CHECK(check_axioms({{0, 1}, {1}})->axiom_name() == "shape");
  CHECK(check_axioms({{0, 5}, {1, 1}})->axiom_name() == "range");
}

TEST_CASE("constructors") {
  CHECK(trivial(1).table() == CayleyTable{{0}});
  CHECK(trivial(2).table() == CayleyTable{{0, 0}, {1, 1}});
  CHECK(trivial(3) == catalog_quandle("3.1"));
  CHECK(dihedral(3).table() == CayleyTable{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}});
  CHECK(dihedral(1) == trivial(1));
  CHECK(relabel(catalog_quandle("4.6"), {0, 2, 1, 3}) == dihedral(4));
  CHECK_THROWS_AS(trivial(0), std::invalid_argument);
  CHECK_THROWS_AS(dihedral(0), std::invalid_argument);

  for (std::uint32_t n = 1; n <= 9; ++n) {
    CHECK(alexander(AlexanderParams::make(n, n - 1)) == dihedral(n));
    CHECK(alexander(AlexanderParams::make(n, 1)) == trivial(n));
  }
  auto a52 = alexander(AlexanderParams::make(5, 2));
  CHECK(a52.alexander_params()->beta == 4);
  CHECK(props(a52).latin);
  CHECK_THROWS_AS(AlexanderParams::make(6, 2), std::invalid_argument);
  CHECK(dihedral(6).alexander_params()->alpha == 5);
}

TEST_CASE("conjugation quandles") {
  CHECK(conjugation(cyclic_group_table(3)) == trivial(3));
  CHECK(conjugation(cyclic_group_table(1)) == trivial(1));

  const CayleyTable golden_one_indexed = {{1, 1, 1, 1, 1, 1}, {2, 2, 2, 3, 3, 3}, {3, 3, 3, 2, 2, 2},
                                          {4, 5, 6, 4, 6, 5}, {5, 6, 4, 6, 5, 4}, {6, 4, 5, 5, 4, 6}};
  auto s3 = conjugation(s3_group_table());
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) CHECK(s3.op(x, y) + 1 == golden_one_indexed[x][y]);

  auto p = props(s3);
  REQUIRE(p.orbits.size() == 3);
  CHECK(p.orbits[0] == std::vector<Element>{0});
  CHECK(p.orbits[1] == std::vector<Element>{1, 2});
  CHECK(p.orbits[2] == std::vector<Element>{3, 4, 5});

  CHECK_THROWS_AS(conjugation({{0, 1}, {0, 1}}), GroupError);
  CHECK_THROWS_AS(check_group({{1, 0, 2}, {0, 1, 2}, {2, 2, 2}}), GroupError);
}

TEST_CASE("properties") {
  auto d3 = props(dihedral(3));
  CHECK(d3.involutive);
  CHECK(d3.latin);
  CHECK(d3.medial);
  CHECK(d3.connected);

  auto t3 = props(trivial(3));
  CHECK(t3.involutive);
  CHECK(t3.medial);
  CHECK_FALSE(t3.latin);
  CHECK_FALSE(t3.connected);
  CHECK(t3.orbits == std::vector<std::vector<Element>>{{0}, {1}, {2}});

  for (std::size_t n = 1; n <= 12; ++n) {
    auto p = props(dihedral(n));
    CHECK(p.involutive);
    CHECK(p.latin == (n % 2 == 1));
    CHECK(p.medial);
  }
}

TEST_CASE("every constructed quandle satisfies the axioms") {
  for (std::size_t n = 1; n <= 10; ++n) {
    CHECK_FALSE(check_axioms(trivial(n).table()));
    CHECK_FALSE(check_axioms(dihedral(n).table()));
    CHECK_FALSE(check_axioms(conjugation(cyclic_group_table(n)).table()));
    CHECK(props(conjugation(cyclic_group_table(n))).medial);
    for (std::uint32_t a = 1; a < n; ++a)
      if (std::gcd<std::uint32_t, std::uint32_t>(a, static_cast<std::uint32_t>(n)) == 1) {
        auto q = alexander(AlexanderParams::make(static_cast<std::uint32_t>(n), a));
        CHECK(self_distributive(q.table()));
        CHECK(props(q).medial);
      }
  }
  CHECK_FALSE(check_axioms(conjugation(s3_group_table()).table()));
}

TEST_CASE("catalog") {
  CHECK(catalog(3).size() == 3);
  CHECK(catalog(4).size() == 7);
  CHECK_THROWS_AS(catalog(5), std::invalid_argument);
  CHECK(catalog(3)[2].label == "3.3");
  CHECK(catalog_quandle("3.3") == dihedral(3));
  CHECK(catalog_quandle("4.2").table() ==
        CayleyTable{{0, 0, 0, 0}, {1, 1, 1, 2}, {2, 2, 2, 1}, {3, 3, 3, 3}});
  CHECK(catalog_quandle("4.7").table() ==
        CayleyTable{{0, 3, 1, 2}, {2, 1, 3, 0}, {3, 0, 2, 1}, {1, 2, 0, 3}});
  CHECK(props(catalog_quandle("4.7")).latin);
  CHECK_THROWS_AS(catalog_quandle("4.8"), std::invalid_argument);
}

TEST_CASE("relabeling preserves the axioms") {
  std::mt19937 rng(3);
  for (const auto& e : catalog(4)) {
    std::vector<Element> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    auto r = relabel(e.quandle, perm);
    for (Element x = 0; x < 4; ++x)
      for (Element y = 0; y < 4; ++y) CHECK(r.op(perm[x], perm[y]) == perm[e.quandle.op(x, y)]);
  }
  CHECK_THROWS_AS(relabel(trivial(2), {0, 0}), std::invalid_argument);
}

TEST_CASE("right division") {
  auto q = catalog_quandle("4.7");
  for (Element x = 0; x < 4; ++x)
    for (Element y = 0; y < 4; ++y) CHECK(q.right_div(q.op(x, y), y) == x);
}

TEST_CASE("quandle sources") {
  CHECK(quandle_from_source("dihedral:5") == dihedral(5));
  CHECK(quandle_from_source("trivial:2") == trivial(2));
  CHECK(quandle_from_source("alexander:5:2") == alexander(AlexanderParams::make(5, 2)));
  CHECK(quandle_from_source("catalog:4.3") == catalog_quandle("4.3"));
  CHECK(quandle_from_source("conjugation:s3") == conjugation(s3_group_table()));
  CHECK(quandle_from_source("conjugation:cyclic:4") == trivial(4));
  CHECK_THROWS_AS(quandle_from_source("dihedral:x"), std::invalid_argument);
  CHECK_THROWS_AS(quandle_from_source("cube:3"), std::invalid_argument);
  CHECK_THROWS_AS(quandle_from_source("alexander:4:2"), std::invalid_argument);
}
