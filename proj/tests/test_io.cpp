#include <doctest.h>

#include "gtutte/errors.hpp"
#include "gtutte/io.hpp"
#include "random_instances.hpp"

using namespace gtutte;
using nlohmann::json;

TEST_CASE("group spec grammar") {
  CHECK(parse_group_spec("triv") == TargetGroup::trivial());
  CHECK(parse_group_spec("Z/1") == TargetGroup::trivial());
  CHECK(parse_group_spec("Z/4") == TargetGroup::cyclic(4));
  CHECK(parse_group_spec("S1") == TargetGroup::circle());
  CHECK(parse_group_spec("Cx") == TargetGroup::complex_star());
  CHECK(parse_group_spec("C") == TargetGroup::complex_plane());
  CHECK(parse_group_spec("R") == TargetGroup::real_line());
  CHECK(parse_group_spec("Z/2 x S1 x R") ==
        TargetGroup{{2}, 1, 1});
  CHECK(parse_group_spec("Z/2xZ/3") == (TargetGroup{{2, 3}, 0, 0}));
  // "C x S1" survives whitespace stripping despite the "Cx" factor name
  CHECK(parse_group_spec("C x S1") == (TargetGroup{{}, 1, 2}));
  CHECK(parse_group_spec("Cx x S1") == (TargetGroup{{}, 2, 1}));
  CHECK(parse_group_spec("Z/6 x triv") == TargetGroup::cyclic(6));

  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z/"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z/0"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Q"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z/2 x"), ParseError);
}

TEST_CASE("integer serialization switches to strings beyond 64 bits") {
  Int big("123456789012345678901234567890");
  json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(int_from_json(j) == big);
  json small = int_to_json(Int(-42));
  CHECK(small.is_number_integer());
  CHECK(int_from_json(small) == -42);
  CHECK_THROWS_AS(int_from_json(json("12x3")), ParseError);
  CHECK_THROWS_AS(int_from_json(json(1.5)), ParseError);
}

TEST_CASE("arrangement round-trip") {
  json j = json::parse(R"({
    "ambient_rank": 2,
    "relations": [[0, 4]],
    "elements": [
      {"label": "a1", "vector": [2, 1]},
      {"label": "a2", "vector": [0, 2]}
    ],
    "group": {"finite": [4], "tori": 0, "reals": 0}
  })");
  Arrangement a = arrangement_from_json(j);
  CHECK(a.list.group().ambient_rank() == 2);
  CHECK(a.list.group().torsion_factors() == std::vector<Int>{4});
  CHECK(a.list.size() == 2);
  CHECK(a.list.labels() == std::vector<std::string>{"a1", "a2"});
  REQUIRE(a.group.has_value());
  CHECK(*a.group == TargetGroup::cyclic(4));

  Arrangement back = arrangement_from_json(arrangement_to_json(a));
  CHECK(back.list.lifts() == a.list.lifts());
  CHECK(back.list.group().relations() == a.list.group().relations());
  CHECK(back.list.labels() == a.list.labels());
  CHECK(back.group == a.group);

  // group may also be a spec string
  json j2 = j;
  j2["group"] = "S1 x R";
  CHECK(*arrangement_from_json(j2).group == TargetGroup::complex_star());

  // labels are optional and default to e1, e2, ...
  json j3 = j;
  j3["elements"][0].erase("label");
  CHECK(arrangement_from_json(j3).list.labels()[0] == "e1");
}

TEST_CASE("malformed arrangements are rejected") {
  CHECK_THROWS_AS(arrangement_from_json(json::array()), ParseError);
  CHECK_THROWS_AS(arrangement_from_json(json::parse(R"({"elements": []})")),
                  ParseError);
  CHECK_THROWS_AS(arrangement_from_json(json::parse(
                      R"({"ambient_rank": 2, "elements": [{"vector": [1]}]})")),
                  ParseError);
  CHECK_THROWS_AS(arrangement_from_json(json::parse(
                      R"({"ambient_rank": 1, "relations": [[1, 2]]})")),
                  ParseError);
}

TEST_CASE("polynomial JSON uses decimal-string coefficients") {
  UniPoly p = UniPoly::monomial(2, 1) + UniPoly(-3);
  json j = poly_to_json(p);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["exponents"] == json::array({1}));
  CHECK(int_from_json(j[0]["coefficient"]) == 2);
  CHECK(int_from_json(j[1]["coefficient"]) == -3);

  BiPoly t = BiPoly::monomial(2, 1, 1) + BiPoly(-2);
  json jt = poly_to_json(t);
  REQUIRE(jt.size() == 2);
  CHECK(jt[0]["exponents"] == json::array({1, 1}));

  LaurentMulti z(2);
  z.add_term(-1, {1, 0}, 4);
  json jz = poly_to_json(z);
  REQUIRE(jz.size() == 1);
  CHECK(jz[0]["exponents"] == json::array({-1, 1, 0}));
}

TEST_CASE("random arrangements survive the round trip") {
  testing::InstanceGen gen(31001);
  for (int trial = 0; trial < 50; ++trial) {
    Arrangement a{gen.random_list(gen.random_group(), 5, 9),
                  gen.random_target_group()};
    Arrangement b = arrangement_from_json(arrangement_to_json(a));
    CHECK(b.list.lifts() == a.list.lifts());
    CHECK(b.list.group().relations() == a.list.group().relations());
    CHECK(b.group == a.group);
  }
}
