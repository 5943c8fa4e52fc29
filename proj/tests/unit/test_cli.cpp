#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "handlecalc/report/json.hpp"

using handlecalc::report::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = handlecalc::cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HANDLECALC_TEST_DATA) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "handlecalc_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("count scenario") {
    const auto r = run({"scenario", "count", "--p", "2", "--seed", "2"});
    CHECK(r.code == 0);
    CHECK(r.json() == Json::parse(R"({"N0":2,"Ni":4,"ok":true,"schema":1})"));
    CHECK(run({"--seed", "2", "scenario", "count", "--p", "3"}).json()["Ni"] == 8);
    CHECK(run({"scenario", "count", "--p", "2,4", "--i", "2"}).json()["Ni"] == 16);
    CHECK(run({"scenario", "count", "--p", "2", "--seed", "3"}).code == 1);
    CHECK(run({"scenario", "count", "--p", "x"}).code == 1);
  }

  TEST_CASE("homology of C_3") {
    const auto r = run({"homology", data("c3.hbd")});
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j["schema"] == 1);
    CHECK(j["boundary"]["order"] == 9);
    CHECK(j["homology"]["h2_rank"] == 2);
    CHECK(j["homology"]["intersection_form"].size() == 2);
    const auto many = run({"homology", data("c3.hbd"), data("s.hbd")}).json();
    CHECK(many["results"].size() == 2);
    CHECK(many["results"][1]["name"] == "S");
  }

  TEST_CASE("boundary and stein") {
    CHECK(run({"boundary", data("c3.hbd")}).json()["boundary"]["torsion"] == Json::parse("[9]"));
    const auto s = run({"stein", data("s.hbd")});
    CHECK(s.code == 0);
    CHECK(s.json()["handles"].size() == 2);
    CHECK(s.json()["handles"][0]["tb"] == 1);
    const auto bad = run({"stein", data("unknot0.hbd")});
    CHECK(bad.code == 1);
    CHECK(bad.json()["ok"] == false);
  }

  TEST_CASE("moves") {
    const auto slid = run({"slide", data("c3.hbd"), "--a", "u1", "--b", "u2", "--sign", "-1"});
    REQUIRE(slid.code == 0);
    CHECK(slid.json()["boundary"]["order"] == 9);

    const auto out = scratch("blown.hbd");
    const auto up = run({"blowup", data("c3.hbd"), "--attach", "u1=1", "--id", "e", "--hbd", out.string()});
    REQUIRE(up.code == 0);
    const auto down = run({"blowdown", out.string(), "--handle", "e"});
    REQUIRE(down.code == 0);
    CHECK(down.json()["diagram"]["linking"] == Json::parse("[[-5,1],[1,-2]]"));

    const auto twist = run({"corktwist", data("s.hbd"), "--one", "h", "--two", "k"});
    REQUIRE(twist.code == 0);
    CHECK(twist.json()["diagram"]["one_handles"] == Json::parse(R"(["k"])"));

    const auto rbd = run({"rbd", data("c3.hbd"), "--chain", "u2,u1", "--p", "3"});
    REQUIRE(rbd.code == 0);
    CHECK(rbd.json()["diagram"]["two_handles"] == Json::parse(R"(["b1"])"));
    CHECK(rbd.json()["boundary"]["order"] == 9);
  }

  TEST_CASE("user errors exit with 1") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"homology", "/nonexistent.hbd"}).code == 1);
    CHECK(run({"slide", data("c3.hbd"), "--a", "u1", "--b", "zz"}).code == 1);
    CHECK(run({"slide", data("c3.hbd"), "--a", "u1", "--b", "u2", "--sign", "3"}).code == 1);
    CHECK(run({"blowdown", data("c3.hbd"), "--handle", "u1"}).code == 1);
    CHECK(run({"blowup", data("c3.hbd"), "--attach", "u1"}).code == 1);
    CHECK(run({"rbd", data("c3.hbd"), "--chain", "u1,u2", "--p", "3"}).code == 1);
    const auto r = run({"homology", data("unknot0.hbd"), "extra.hbd"});
    CHECK(r.code == 1);
    CHECK(r.err.find("error") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
  }

  TEST_CASE("sw commands") {
    const std::string model = data("model3h.json");
    auto r = run({"sw", "blowup", model, "--n", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["basic_classes"].size() == 8);

    r = run({"sw", "genusbound", model, "--alpha", "T"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["genus"] == 2);
    CHECK(r.json()["max_pairing"] == 2);

    r = run({"sw", "adjunction", model, "--alpha", "1,0,0,0,0,0", "--genus", "1"});
    CHECK(r.code == 1);
    CHECK(r.json()["violators"].size() == 2);
    CHECK(run({"sw", "adjunction", model, "--alpha", "T", "--genus", "2"}).code == 0);
    CHECK(run({"sw", "adjunction", model, "--alpha", "T", "--genus", "2", "--literal"}).code == 1);
    CHECK(run({"sw", "adjunction", model, "--alpha", "1,0", "--genus", "2"}).code == 1);

    r = run({"sw", "knotsurgery", model, "--torus", "S", "--knot", "2,3"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["basic_classes"].size() == 6);
    CHECK(r.json()["alexander"]["text"] == "t - 1 + t^-1");
    CHECK(run({"sw", "knotsurgery", model, "--torus", "S", "--knot", "2,4"}).code == 1);
    CHECK(run({"sw", "blowup", "/nonexistent.json"}).code == 1);
  }

  TEST_CASE("descend through the CLI") {
    const auto x0 = handlecalc::catalog::build_X0_model({3}, 2);
    const auto path = scratch("x0.json");
    std::ofstream(path) << handlecalc::report::model_to_json(x0.data).dump();
    const auto r = run({"sw", "descend", path.string(), "--chain", "u1_1", "--chain", "u1_2"});
    REQUIRE(r.code == 0);
    CHECK(r.json()["basic_classes"].size() == 2);
    CHECK(r.json()["lifts"].size() == 2);
    CHECK(run({"sw", "descend", path.string(), "--chain", "u1_2", "--chain", "u1_1"}).code == 1);
  }

  TEST_CASE("scenarios") {
    CHECK(run({"scenario", "restriction", "--p", "4"}).json()["ok"] == true);
    const auto g = run({"scenario", "genus", "--n", "5", "--k", "3"}).json();
    CHECK(g["max_pairing"] == 24);
    CHECK(g["genus"] == 13);
    const auto k = run({"scenario", "knotted", "--knots", "2,3;2,5"});
    CHECK(k.code == 0);
    CHECK(k.json()["outcomes"].size() == 2);
    CHECK(run({"scenario", "lens"}).json()["checks"].size() >= 9);
    CHECK(run({"scenario", "cork", "--size", "2"}).code == 0);
    CHECK(run({"scenario", "mn"}).code == 0);
    CHECK(run({"scenario", "stein", "--size", "4"}).code == 0);
    CHECK(run({"scenario", "nothing"}).code == 1);
  }

  TEST_CASE("scenario export round trip") {
    const auto dir = scratch("export");
    std::filesystem::remove_all(dir);
    const auto r = run({"scenario", "export", "stein", "--dir", dir.string(), "--size", "3"});
    REQUIRE(r.code == 0);
    const Json manifest = Json::parse(std::ifstream(dir / "stein.json"));
    CHECK(manifest["schema"] == 1);
    for (const auto& f : manifest["files"]) {
      CHECK(run({"stein", (dir / f["file"].get<std::string>()).string()}).code == 0);
    }
    CHECK(run({"scenario", "export", "bogus", "--dir", dir.string()}).code == 1);
  }

  TEST_CASE("output is deterministic") {
    CHECK(run({"homology", data("s.hbd")}).out == run({"homology", data("s.hbd")}).out);
  }
}
