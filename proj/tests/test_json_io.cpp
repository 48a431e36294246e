#include "doctest.h"
#include "dynshaf/json_io.hpp"
#include "test_util.hpp"

using namespace dynshaf;
using namespace dynshaf::testutil;

TEST_CASE("point set round trip with canonical ordering") {
  PointSet x = pset(1, {pt({1, 3}), pt({0, 1}), pt({1, 0})});
  json j = to_json(x);
  CHECK(j["dimension"] == 1);
  CHECK(pointset_from_json(j) == x);
  // rationals arrive as canonical strings
  PointSet y = pointset_from_json(json::parse(
      R"({"dimension": 1, "points": [["1/2", "3"], ["2", "4/6"]]})"));
  CHECK(y.contains(pt({1, 6})));
  CHECK(y.contains(pt({3, 1})));
  CHECK_THROWS_AS(pointset_from_json(json::parse(R"({"points": []})")),
                  std::invalid_argument);
}

TEST_CASE("prime set round trip") {
  PrimeSet s{5, 2};
  CHECK(primeset_from_json(to_json(s)) == s);
  CHECK_THROWS_AS(primeset_from_json(json::parse("[4]")),
                  std::invalid_argument);
}

TEST_CASE("linear map round trip") {
  ProjLinearMap phi(IntMat{{1, 2}, {3, 4}});
  CHECK(map_from_json(to_json(phi)) == phi);
  CHECK_THROWS_AS(map_from_json(json::parse(R"(["1","2","3"])")),
                  std::invalid_argument);
}

TEST_CASE("morphism round trip drops zero terms") {
  Morphism f = morph(1, 2, {{1, 0, 0}, {0, 0, 1}});
  json j = to_json(f);
  CHECK(j["forms"][0]["terms"].size() == 1);
  CHECK(morphism_from_json(j) == f);
}

TEST_CASE("triple round trip and x reconstruction") {
  Morphism f = morph(1, 2, {{1, 0, 0}, {0, 0, 1}});
  Triple t(f, pset(1, {pt({1, 2}), pt({1, 3})}));
  json j = to_json(t);
  CHECK(triple_from_json(j) == t);
  j.erase("x");
  CHECK(triple_from_json(j) == t);
}

TEST_CASE("reports carry the paper_conditions block") {
  auto t = Triple(morph(1, 2, {{1, 0, 0}, {0, 0, 1}}),
                  pset(1, {pt({1, 2}), pt({1, 3})}));
  json j = to_json(check_membership(t, PrimeSet{2, 3}));
  REQUIRE(j.contains("paper_conditions"));
  for (const char* key :
       {"1_degree_morphism", "2_orbit_size", "3_union_structure",
        "4_galois_invariant", "5_good_reduction", "6_hypersurface"})
    CHECK(j["paper_conditions"].contains(key));
  CHECK(j["paper_conditions"]["5_good_reduction"]["criterion"] ==
        "stable-model");
}

TEST_CASE("good reduction report serialization") {
  PointSet x = pset(1, {pt({1, 0}), pt({0, 1}), pt({1, 1}), pt({1, 3})});
  json j = to_json(bad_primes_pointset(x, PrimeSet{2}));
  CHECK(j["ok"] == false);
  CHECK(j["general_position"] == true);
  CHECK(j["bad_primes"] == json::array({3}));
  REQUIRE(j["witnesses"].size() == 1);
  CHECK(j["witnesses"][0]["prime"] == 3);
}

TEST_CASE("solution set serialization is deterministic") {
  SUnitSolutionSet sols = solve_unit_equation(PrimeSet{2}, 5);
  json j = to_json(sols);
  CHECK(j["count"] == 3);
  CHECK(j["bound"] == 5);
  CHECK(j.dump() == to_json(solve_unit_equation(PrimeSet{2}, 5)).dump());
}

TEST_CASE("huge integers serialize as strings") {
  Int big("340282366920938463463374607431768211455");
  json j = int_to_json(big);
  CHECK(j.is_string());
  CHECK(int_to_json(Int(7)) == json(7));
}
