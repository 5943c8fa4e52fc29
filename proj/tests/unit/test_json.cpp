#include <doctest.h>

#include "handlecalc/report/json.hpp"

using namespace handlecalc;
using report::Json;

TEST_SUITE("json") {
  TEST_CASE("big integers") {
    CHECK(report::big(BigInt(42)) == Json(42));
    const BigInt huge("123456789012345678901234567890");
    CHECK(report::big(huge) == Json("123456789012345678901234567890"));
    CHECK(report::parse_big(report::big(huge)) == huge);
    CHECK(report::parse_big(Json(-7)) == -7);
    CHECK_THROWS_AS(report::parse_big(Json("12a")), Error);
    CHECK_THROWS_AS(report::parse_big(Json(1.5)), Error);
    CHECK_THROWS_AS(report::parse_big(Json("-")), Error);
  }

  TEST_CASE("documents carry the schema") {
    CHECK(report::document()["schema"] == report::kSchemaVersion);
  }

  TEST_CASE("groups and diagrams") {
    AbelianGroup g;
    g.torsion = {BigInt(3)};
    const Json j = report::to_json(g);
    CHECK(j["order"] == 3);
    CHECK(j["free_rank"] == 0);
    g.free_rank = 1;
    CHECK(report::to_json(g)["order"].is_null());

    HandleDecomposition d("w");
    d.add_one_handle("h");
    d.add_two_handle("k", BigInt(0));
    d.set_run_through("k", "h", BigInt(1));
    const Json dj = report::to_json(d);
    CHECK(dj["run_through"] == Json::parse("[[1]]"));
    CHECK(dj["two_handles"] == Json::parse(R"(["k"])"));
  }

  TEST_CASE("model round trip") {
    const Json in = Json::parse(R"({
      "pairing": [[0,1],[1,0]],
      "named": {"x": [1,0]},
      "b2plus": 3,
      "basic_classes": [{"evaluation": [2,0], "weight": 2}, [-2,0]]
    })");
    const auto m = report::model_from_json(in);
    CHECK(m.model.euler == 4);
    CHECK(m.model.b2plus == 3);
    CHECK(m.classes.size() == 2);
    IntegerVector k(2);
    k << BigInt(2), BigInt(0);
    CHECK(m.classes.weight(k) == 2);
    const auto back = report::model_from_json(report::model_to_json(m));
    CHECK(back.classes == m.classes);
    CHECK(back.model.lattice.pairing() == m.model.lattice.pairing());
    CHECK(back.model.lattice.named("x") == m.model.lattice.named("x"));
    CHECK(back.model.euler == m.model.euler);

    CHECK_THROWS_AS(report::model_from_json(Json::parse("{}")), Error);
    CHECK_THROWS_AS(report::model_from_json(Json::parse(R"({"pairing": [[0,1],[1]]})")), Error);
    CHECK_THROWS_AS(report::model_from_json(Json::parse(R"({"pairing": [[0,1],[1,0]], "basic_classes": [[1]]})")),
                    Error);
  }

  TEST_CASE("output is deterministic") {
    const auto r = catalog::lens_scenario(4);
    CHECK(report::to_json(r).dump() == report::to_json(catalog::lens_scenario(4)).dump());
    const std::string text = report::to_json(LaurentPolynomial::monomial(-1)).dump();
    CHECK(text == R"({"coefficients":{"-1":1},"text":"t^-1"})");
  }
}
