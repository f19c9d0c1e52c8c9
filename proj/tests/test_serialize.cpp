#include <doctest.h>

#include <cstdlib>
#include <fstream>

#include "gqu/serialize.hpp"

using namespace gqu;

namespace {

Json sample() {
    return Json::parse(R"({
      "version": 1,
      "universe": {"size": 3, "labels": ["a", "b", "c"]},
      "topology": [[1], [0, 1], [0, 1, 2]],
      "base": [[[0, 0], [1, 1], [2, 2], [0, 1]]],
      "sequences": [{"name": "alt", "preamble": [2], "cycle": [0, 1]}]
    })");
}

} // namespace

TEST_CASE("space files parse into validated-ready structures") {
    const SpaceFile f = parse_space_file(sample());
    CHECK(f.universe.size == 3);
    CHECK(f.universe.labels[2] == "c");
    REQUIRE(f.topology.has_value());
    CHECK(f.topology->size() == 3);
    REQUIRE(f.base.has_value());
    CHECK(f.base->at(0).contains(0, 1));
    REQUIRE(f.sequences.size() == 1);
    CHECK(f.sequences[0].name == "alt");
    CHECK(ep_term(f.sequences[0].seq, 0) == 2);
}

TEST_CASE("canonical serialization is a fixed point") {
    const SpaceFile f = parse_space_file(sample());
    const Json once = space_file_to_json(f);
    const Json twice = space_file_to_json(parse_space_file(once));
    CHECK(once.dump() == twice.dump());
}

TEST_CASE("malformed input is rejected with input errors") {
    CHECK_THROWS_AS(parse_space_file(Json::parse("[]")), InvalidArgument);
    CHECK_THROWS_AS(parse_space_file(Json::parse(R"({"universe":{}})")),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_space_file(Json::parse(
                        R"({"universe":{"size":2},"version":9})")),
                    InvalidArgument);
    CHECK_THROWS_AS(parse_space_file(Json::parse(
                        R"({"universe":{"size":2},"topology":[["x"]]})")),
                    InvalidArgument);
    CHECK_THROWS_AS(load_space_file("/nonexistent/path.json"), InvalidArgument);
}

TEST_CASE("rationals use the p/q wire format") {
    CHECK(rat_to_string(Rat(1, 3)) == "1/3");
    CHECK(rat_to_string(Rat(-4, 2)) == "-2");
    CHECK(rat_from_string("7/2") == Rat(7, 2));
    CHECK(rat_from_string("-5") == Rat(-5));
    CHECK_THROWS_AS(rat_from_string("one half"), InvalidArgument);
    for (int p = -6; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q)
            CHECK(rat_from_string(rat_to_string(Rat(p, q))) == Rat(p, q));
}

TEST_CASE("report serialization omits wall-clock noise") {
    VerificationReport r;
    r.name = "x";
    r.checked = 2;
    r.millis = 123.0;
    const Json j = to_json(r);
    CHECK_FALSE(j.contains("millis"));
    CHECK(j["passed"] == true);
}

TEST_CASE("shipped schema matches the parser's expectations") {
    const char* dir = std::getenv("GQU_SCHEMA_DIR");
    REQUIRE(dir != nullptr);
    std::ifstream in(std::string(dir) + "/space.json");
    REQUIRE(in.good());
    Json schema;
    in >> schema;
    CHECK(schema["type"] == "object");
    CHECK(schema["required"] == Json::array({"universe"}));
    for (const char* key : {"version", "universe", "topology", "base", "sequences"})
        CHECK(schema["properties"].contains(key));
    // canonical output only uses keys the schema admits
    const Json out = space_file_to_json(parse_space_file(sample()));
    for (const auto& [key, value] : out.items())
        CHECK(schema["properties"].contains(key));
}
