#include <algorithm>
#include <fstream>

#include "doctest.h"
#include "entwit/json_io.hpp"

using namespace entwit;

namespace {

json load_schema(const std::string& name) {
  std::ifstream in(std::string(ENTWIT_SOURCE_DIR) + "/schemas/" + name);
  REQUIRE(in.good());
  json j;
  in >> j;
  return j;
}

}  // namespace

TEST_CASE("rationals round-trip, including beyond int64") {
  const json j = rational_to_json(Rational(5, 4));
  CHECK(j["num"] == 5);
  CHECK(j["den"] == 4);
  CHECK(rational_from_json(j) == Rational(5, 4));

  // 2^-100: the denominator no longer fits an int64 and becomes a string.
  const Rational tiny = pow2(-100);
  const json jt = rational_to_json(tiny);
  CHECK(jt["num"] == 1);
  CHECK(jt["den"].is_string());
  CHECK(jt["den"] == "1267650600228229401496703205376");
  CHECK(rational_from_json(jt) == tiny);

  CHECK(rational_from_json(rational_to_json(Rational(-7, 3))) == Rational(-7, 3));
}

TEST_CASE("graphs, partitions and colorings round-trip") {
  const Graph g = lattice_graph(2, 3);
  const json j = graph_to_json(g);
  CHECK(j["n"] == 6);
  CHECK(validate_against_schema(j, load_schema("graph.schema.json")).empty());
  const Graph back = graph_from_json(j);
  CHECK(back.n() == g.n());
  CHECK(back.edges() == g.edges());

  const Partition p = parse_partition("0,1,1,0,2,2");
  CHECK(partition_from_json(partition_to_json(p)).blocks == p.blocks);

  const Coloring c = *two_coloring(g);
  CHECK(coloring_from_json(coloring_to_json(c)).classes == c.classes);
}

TEST_CASE("base64 and outcome packing round-trip") {
  CHECK(base64_encode({}) == "");
  CHECK(base64_encode({'M', 'a', 'n'}) == "TWFu");
  CHECK(base64_encode({'M', 'a'}) == "TWE=");
  CHECK(base64_encode({'M'}) == "TQ==");
  const std::vector<uint8_t> bytes{0, 1, 2, 254, 255, 17, 99};
  CHECK(base64_decode(base64_encode(bytes)) == bytes);
  CHECK_THROWS_AS(base64_decode("@@@@"), std::invalid_argument);

  OutcomeBuffer buf(10, 3);
  uint64_t w;
  w = 0b1100000101;
  buf.append(&w);
  w = 0b0000000000;
  buf.append(&w);
  w = 0b1111111111;
  buf.append(&w);
  const auto packed = pack_outcomes(buf);
  CHECK(packed.size() == 6);  // 2 bytes per 10-qubit shot
  const OutcomeBuffer back = unpack_outcomes(packed, 10, 3);
  for (long long s = 0; s < 3; ++s)
    for (int q = 0; q < 10; ++q) CHECK(back.get(s, q) == buf.get(s, q));
  CHECK_THROWS_AS(unpack_outcomes(packed, 10, 4), std::invalid_argument);
}

TEST_CASE("experiment records round-trip through JSON") {
  const Graph g = chain_graph(6);
  const auto col = *two_coloring(g);
  const auto rec = run_experiment(g, col, 50, 0.2, 77);
  const json j = record_to_json(rec);
  CHECK(validate_against_schema(j, load_schema("record.schema.json")).empty());

  const ExperimentRecord back = record_from_json(j);
  CHECK(back.shots == rec.shots);
  CHECK(back.seed == rec.seed);
  CHECK(back.noise_p == rec.noise_p);
  REQUIRE(back.settings.size() == rec.settings.size());
  for (size_t l = 0; l < rec.settings.size(); ++l) {
    CHECK(back.settings[l].counts.hits == rec.settings[l].counts.hits);
    CHECK(back.settings[l].setting.x_set == rec.settings[l].setting.x_set);
    CHECK(back.settings[l].setting.z_set == rec.settings[l].setting.z_set);
    const auto& a = rec.settings[l].outcomes;
    const auto& b = back.settings[l].outcomes;
    REQUIRE(a.shots() == b.shots());
    for (long long s = 0; s < a.shots(); ++s)
      for (int q = 0; q < a.n(); ++q) CHECK(a.get(s, q) == b.get(s, q));
  }

  // Identical reserialization: the audit trail is byte-stable.
  CHECK(record_to_json(back).dump() == j.dump());

  // Raw payload can be omitted.
  const json lean = record_to_json(rec, /*include_raw=*/false);
  CHECK_FALSE(lean["settings"][0].contains("outcomes_base64"));
  CHECK(validate_against_schema(lean, load_schema("record.schema.json")).empty());
}

TEST_CASE("csv export") {
  const Graph g = chain_graph(4);
  const auto rec = run_experiment(g, *two_coloring(g), 5, 0.1, 3);
  const std::string csv = record_to_csv(rec);
  CHECK(csv.rfind("setting,shot,outcome\n", 0) == 0);
  // Header + 2 settings x 5 shots.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 11);
  const auto second_line = csv.substr(csv.find('\n') + 1, csv.find('\n', csv.find('\n') + 1) -
                                                              csv.find('\n') - 1);
  CHECK(second_line.rfind("0,0,", 0) == 0);
  CHECK(second_line.size() == 4 + 4);  // prefix plus one bit per qubit
}

TEST_CASE("schema validation catches structural problems") {
  const json schema = load_schema("graph.schema.json");
  CHECK(validate_against_schema(json{{"n", 2}, {"edges", json::array()}}, schema).empty());

  const auto missing = validate_against_schema(json{{"n", 2}}, schema);
  CHECK(missing.find("edges") != std::string::npos);

  const auto wrong = validate_against_schema(json{{"n", "two"}, {"edges", json::array()}}, schema);
  CHECK_FALSE(wrong.empty());

  const auto bad_item =
      validate_against_schema(json{{"n", 2}, {"edges", json::array({json::array({0, "x"})})}},
                              schema);
  CHECK_FALSE(bad_item.empty());

  // Union types: rational components may be integers or strings.
  const json vschema = load_schema("verdict.schema.json");
  json verdict{{"kind", "gme"},     {"k", 2},     {"constant", {{"num", "123456789012345678901"},
                                                                {"den", 4}}},
               {"value", -0.5},     {"stderr", 0.0}, {"detected", true},
               {"p_limit", 0.25}};
  CHECK(validate_against_schema(verdict, vschema).empty());
  verdict["constant"]["num"] = true;
  CHECK_FALSE(validate_against_schema(verdict, vschema).empty());
}
