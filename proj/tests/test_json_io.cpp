#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gjts/json_io.hpp"
#include "gjts/models.hpp"
#include "test_helpers.hpp"

using namespace gjts;

TEST_CASE("system serialization round trips, tripotent included") {
  for (const BuiltModel& m : {build_akn_ank(2, 3), build_dnk(4, 3, 2), build_ann_ann(1)}) {
    std::string text = system_to_json_text(m.system, &m.tripotent, &m.descriptor);
    LoadedSystem loaded = system_from_json_text(text);
    CHECK(loaded.system == m.system);
    CHECK(loaded.system.label() == m.system.label());
    REQUIRE(loaded.tripotent.has_value());
    CHECK(*loaded.tripotent == m.tripotent);
  }
}

TEST_CASE("serialization is deterministic") {
  BuiltModel m = build_dnk(3, 2, 1);
  CHECK(system_to_json_text(m.system) == system_to_json_text(m.system));
}

TEST_CASE("irrational scalars survive the text form") {
  // The square pair tripotent carries 1/sqrt2 entries, serialized as
  // ["0","1/2","0","0"].
  BuiltModel m = build_ann_ann(1);
  std::string text = system_to_json_text(m.system, &m.tripotent);
  CHECK(text.find("\"1/2\"") != std::string::npos);
  LoadedSystem loaded = system_from_json_text(text);
  CHECK(*loaded.tripotent == m.tripotent);
}

TEST_CASE("circle serialization round trips") {
  BuiltModel m = build_dnk(3, 3, 3);
  TripotentContext ctx = make_context(m.system, m.tripotent);
  CircleExtraction ex = extract_circle(ctx, peirce_decompose(ctx));
  LoadedCircle loaded = circle_from_json_text(circle_to_json_text(ex.circle));
  CHECK(loaded.space == ex.circle.space());
  CHECK(loaded.table == ex.circle.table());
}

TEST_CASE("schema and structure violations are rejected") {
  CHECK_THROWS_AS(system_from_json_text("{\"schema\":\"2\",\"dim\":1,\"constants\":[]}"),
                  JsonFormatError);
  CHECK_THROWS_AS(system_from_json_text("{\"dim\":0,\"constants\":[]}"), JsonFormatError);
  CHECK_THROWS_AS(system_from_json_text("{\"dim\":2}"), JsonFormatError);
  CHECK_THROWS_AS(system_from_json_text("[1,2,3]"), JsonFormatError);
  // Out-of-range index.
  CHECK_THROWS_AS(system_from_json_text("{\"dim\":1,\"constants\":[{\"i\":0,\"j\":0,\"k\":5,"
                                        "\"value\":[[\"1\",\"0\",\"0\",\"0\"]]}]}"),
                  JsonFormatError);
  // Wrong scalar arity.
  CHECK_THROWS_AS(system_from_json_text("{\"dim\":1,\"constants\":[{\"i\":0,\"j\":0,\"k\":0,"
                                        "\"value\":[[\"1\",\"0\"]]}]}"),
                  JsonFormatError);
  CHECK_THROWS_AS(circle_from_json_text("{\"dims\":{\"u11p\":1},\"circle\":[]}"),
                  JsonFormatError);
  CHECK_THROWS_AS(circle_from_json_text("{\"dims\":{\"u11p\":1,\"u11m\":0,\"u13p\":0,"
                                        "\"u13m\":0},\"circle\":[{\"i\":0,\"j\":7,\"value\":"
                                        "[[\"0\",\"0\",\"0\",\"0\"]]}]}"),
                  GradingMismatch);
}

TEST_CASE("tripotent file forms") {
  Vector e(2);
  e[0] = Scalar(1);
  e[1] = Scalar::fraction(-1, 2);
  CHECK(tripotent_from_json_text("[[\"1\",\"0\",\"0\",\"0\"],[\"-1/2\",\"0\",\"0\",\"0\"]]", 2) ==
        e);
  CHECK(tripotent_from_json_text(
            "{\"tripotent\":[[\"1\",\"0\",\"0\",\"0\"],[\"-1/2\",\"0\",\"0\",\"0\"]]}", 2) == e);
  CHECK_THROWS_AS(tripotent_from_json_text("{\"x\":1}", 2), JsonFormatError);
  CHECK_THROWS_AS(tripotent_from_json_text("[[\"1\",\"0\",\"0\",\"0\"]]", 2), JsonFormatError);
}

TEST_CASE("explicit zero values are canonicalized away") {
  std::string text =
      "{\"dim\":2,\"label\":\"z\",\"constants\":[{\"i\":0,\"j\":0,\"k\":0,"
      "\"value\":[[\"0\",\"0\",\"0\",\"0\"],[\"0\",\"0\",\"0\",\"0\"]]}]}";
  LoadedSystem loaded = system_from_json_text(text);
  CHECK(loaded.system.constants().empty());
}
