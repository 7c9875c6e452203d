#include <doctest.h>

#include <set>

#include "qder/reference.hpp"

using namespace qder;

TEST_CASE("linear forms") {
  CHECK(parse_linear_form("a1") == LinearForm{{1, 1}});
  CHECK(parse_linear_form("-a1+a2") == LinearForm{{1, -1}, {2, 1}});
  CHECK(parse_linear_form("4a1+3a2") == LinearForm{{1, 4}, {2, 3}});
  CHECK(parse_linear_form("-(a1+a2)") == LinearForm{{1, -1}, {2, -1}});
  CHECK(parse_linear_form("-2(a1-a3)") == LinearForm{{1, -2}, {3, 2}});
  CHECK(parse_linear_form("2*a3") == LinearForm{{3, 2}});
  CHECK(parse_linear_form("a1 - a1").empty());
  CHECK(parse_linear_form("0").empty());
  CHECK(parse_linear_form("a12") == LinearForm{{12, 1}});
  for (const char* bad : {"", "a", "a0", "b1", "(a1", "a1+", "3", "a1a2"})
    CHECK_THROWS_AS(parse_linear_form(bad), std::invalid_argument);
}

TEST_CASE("reference file parsing") {
  auto e = parse_reference(R"(# sample
label: sample
quandle: catalog:3.2
field: Q
layout: full
matrix:
a1 -a1 0
-a1 a1 0   # trailing comment
0 0 0
)",
                           "sample.txt");
  CHECK(e.label == "sample");
  CHECK(e.n == 3);
  CHECK(e.parameter_count() == 1);
  auto s = e.subspace();
  REQUIRE(s.dim() == 1);
  CHECK(s.vectors()[0][1] == Scalar::from_int(FieldSpec::rationals(), -1));

  auto z = parse_reference("label: z\nquandle: dihedral:5\nfield: GF(5)\nlayout: zero\n", "z.txt");
  CHECK(z.subspace().dim() == 0);
  CHECK(z.field == FieldSpec::prime(5));

  CHECK_THROWS_AS(parse_reference("label: x\nquandle: dihedral:3\nfield: Q\nlayout: full\nmatrix:\na1 a2\n", "x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_reference("label: x\nquandle: dihedral:3\nfield: Q\nlayout: odd\n", "x"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_reference("label: x\nquandle: dihedral:3\nfield: Q\nbogus: 1\n", "x"), std::invalid_argument);
}

TEST_CASE("uv layout expands to the 4×4 block pattern") {
  auto e = parse_reference("label: b\nquandle: dihedral:8\nfield: Q\nlayout: uv\nU:\na1 a2\na3 a4\nV:\n0 -a2\na3 0\n",
                           "b.txt");
  REQUIRE(e.entries.size() == 8);
  CHECK(e.entries[0][0] == LinearForm{{1, 1}});
  CHECK(e.entries[0][3] == LinearForm{{2, -1}});   // V(0,1)
  CHECK(e.entries[2][1] == LinearForm{{2, 1}});    // -V(0,1)
  CHECK(e.entries[2][0].empty());                  // -V(0,0)
  CHECK(e.entries[0][4] == LinearForm{{1, -1}});   // -U
  CHECK(e.entries[6][2] == LinearForm{{1, -1}});   // -U in block (3, 1)
}

TEST_CASE("embedded reference data") {
  const auto& all = reference_entries();
  CHECK(all.size() == 33);
  std::set<std::string> labels;
  for (const auto& e : all) {
    CHECK(labels.insert(e.label).second);
    CHECK(e.entries.size() == e.n);
  }
  CHECK(reference_entry("dihedral/5/GF(5)").n == 5);
  CHECK_THROWS_AS(reference_entry("nope"), std::invalid_argument);
}
