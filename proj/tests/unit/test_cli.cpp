#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qder/cli.hpp"
#include "qder/json_io.hpp"

using namespace qder;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  json parsed() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "qder");
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str()};
}

std::string data_file(const std::string& name) { return std::string(QDER_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("derivations command") {
  auto r = run({"derivations", "--quandle", "dihedral:3", "--field", "GF(3)"});
  CHECK(r.code == kExitOk);
  auto j = r.parsed();
  CHECK(j["dim"] == 2);
  CHECK(j["field"] == "GF(3)");
  CHECK(j["quandle"] == "dihedral:3");
  REQUIRE(j["basis"].size() == 2);
  CHECK(j["basis"][0].size() == 3);
  CHECK(j["basis"][0][0][0].is_number_integer());

  auto q = run({"derivations", "--quandle", "catalog:3.2"}).parsed();
  CHECK(q["dim"] == 1);
  CHECK(q["basis"][0][0][0] == "1/1");
  CHECK(q["basis"][0][0][1] == "-1/1");

  CHECK(run({"derivations", "--quandle", "catalog:4.7", "--field", "Q"}).parsed()["dim"] == 0);
}

TEST_CASE("validate command") {
  auto bad = run({"validate", "--file", data_file("bad.json")});
  CHECK(bad.code != kExitOk);
  auto j = bad.parsed();
  CHECK(j["valid"] == false);
  CHECK(j["violation"]["axiom"] == "III");
  CHECK(j["violation"]["witness"].size() == 3);

  auto good = run({"validate", "--file", data_file("latin4.json")});
  CHECK(good.code == kExitOk);
  CHECK(good.parsed()["valid"] == true);

  // Other commands refuse an invalid table with the same witness.
  auto der = run({"derivations", "--file", data_file("bad.json")});
  CHECK(der.code == kExitFailure);
  CHECK(der.parsed()["error"]["violation"]["axiom"] == "III");
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"derivations"}).code == kExitUsage);
  CHECK(run({"derivations", "--quandle", "dihedral:3", "--file", "x.json"}).code == kExitUsage);
  CHECK(run({"derivations", "--quandle", "dihedral:3", "--field", "GF(4)"}).code == kExitUsage);
  CHECK(run({"derivations", "--quandle", "hexagon:3"}).code == kExitUsage);
  CHECK(run({"derivations", "--file", "/nonexistent/q.json"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  auto e = run({"derivations", "--quandle", "hexagon:3"}).parsed();
  CHECK(e["error"]["kind"] == "usage");
  CHECK(run({"symmetries", "--quandle", "catalog:4.2"}).code == kExitFailure);
}

TEST_CASE("other commands") {
  auto p = run({"props", "--quandle", "conjugation:s3"}).parsed();
  CHECK(p["connected"] == false);
  CHECK(p["orbits"].size() == 3);

  auto s = run({"symmetries", "--quandle", "dihedral:8"}).parsed();
  CHECK(s["dim"] == 4);
  CHECK(s["predicted_dim"] == 4);
  CHECK(s["all_hold"] == true);

  auto l = run({"lietransform", "--quandle", "catalog:3.2"}).parsed();
  CHECK(l["dim"] == 6);
  CHECK(l["basis"].size() == 6);
  CHECK(l["inner_dim"].get<int>() + l["outer_dim"].get<int>() == 1);

  auto in = run({"inner", "--quandle", "trivial:3"}).parsed();
  CHECK(in["der_dim"] == 6);

  auto id = run({"ideals", "--quandle", "dihedral:3"}).parsed();
  CHECK(id["jx"]["dim"] == 0);
  CHECK(id["augmentation_ideal"]["dim"] == 2);

  auto text = run({"derivations", "--quandle", "dihedral:3", "--field", "GF(3)", "--format", "text"});
  CHECK(text.out.rfind("dim 2 over GF(3)", 0) == 0);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"derivations", "--quandle", "dihedral:8"},
           {"lietransform", "--quandle", "dihedral:4", "--field", "GF(2)"},
           {"tables", "--format", "text"}}) {
    auto a = run(args), b = run(args);
    CHECK(a.code == b.code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("quandle JSON round trip") {
  auto q = conjugation(s3_group_table());
  auto path = (std::filesystem::temp_directory_path() / "qder_roundtrip_s3.json").string();
  {
    std::ofstream f(path);
    f << to_json(q).dump();
  }
  CHECK(quandle_from_json(json::parse(to_json(q).dump())) == q);
  auto from_file = run({"derivations", "--file", path, "--field", "GF(3)"}).parsed();
  auto builtin = run({"derivations", "--quandle", "conjugation:s3", "--field", "GF(3)"}).parsed();
  CHECK(from_file["basis"] == builtin["basis"]);
  CHECK(from_file["dim"] == builtin["dim"]);
  std::filesystem::remove(path);
}

TEST_CASE("tables command reports every entry in label order") {
  auto t = run({"tables"});
  auto j = t.parsed();
  CHECK(j["entries"].size() == 33);
  CHECK(j["entries"][0]["label"] == "order3/3.1/Q");
  CHECK(j["entries"][32]["label"] == "s3-conjugation/GF(3)");
  CHECK(t.code == (j["failed"] == 0 ? kExitOk : kExitFailure));
}
