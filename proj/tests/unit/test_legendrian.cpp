#include <doctest.h>

#include "handlecalc/catalog.hpp"
#include "handlecalc/legendrian.hpp"

using namespace handlecalc;
using namespace handlecalc::legendrian;

TEST_SUITE("legendrian") {
  TEST_CASE("unknot front") {
    const auto f = parse_front("L1 R1");
    const auto a = analyze(f);
    CHECK(a.left_cusps == 1);
    CHECK(a.right_cusps == 1);
    CHECK(a.crossings == 0);
    REQUIRE(a.components.size() == 1);
    CHECK(thurston_bennequin(f) == -1);
    CHECK(rotation_number(f) == 0);
    CHECK(f.to_string() == "L1 R1");
  }

  TEST_CASE("trefoil fronts") {
    // Same counts as the closed three-crossing word, but two components.
    const auto two = analyze(parse_front("L1 L2 X2 X2 X2 R2 R1"));
    CHECK(two.crossings == 3);
    CHECK(two.right_cusps == 2);
    CHECK(two.components.size() == 2);

    const auto trefoil = parse_front("L1 L2 X3 X3 X3 R2 R1");
    const auto a = analyze(trefoil);
    CHECK(a.crossings == 3);
    CHECK(a.right_cusps == 2);
    REQUIRE(a.components.size() == 1);
    CHECK(thurston_bennequin(trefoil) == 1);
    CHECK(thurston_bennequin(trefoil) == max_tb_torus_knot(3, 2));
    CHECK(rotation_number(trefoil) == 0);
    CHECK(torus_knot_front(3, 2) == trefoil);
  }

  TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_front("L1 R2"), ParseError);
    try {
      parse_front("L1 R2", 4, 10);
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(e.column() == 14);
    }
    CHECK_THROWS_AS(parse_front(""), ParseError);
    CHECK_THROWS_AS(parse_front("L1"), ParseError);
    CHECK_THROWS_AS(parse_front("L1 X2 R1"), ParseError);
    CHECK_THROWS_AS(parse_front("L1 Q R1"), ParseError);
    CHECK_THROWS_AS(parse_front("L1 R1 O2+"), ParseError);
    CHECK_THROWS_AS(parse_front("L1 R1 O1+ O1-"), ParseError);
    CHECK_THROWS_AS(parse_front("L0 R1"), ParseError);
  }

  TEST_CASE("two-component link") {
    const auto f = parse_front("L1 R1 L1 R1");
    CHECK(analyze(f).components.size() == 2);
    CHECK_THROWS_AS(thurston_bennequin(f), Error);
    CHECK(thurston_bennequin(f, 0) == -1);
    CHECK(thurston_bennequin(f, 1) == -1);
    CHECK_THROWS_AS(thurston_bennequin(f, 2), Error);
  }

  TEST_CASE("stabilised unknot rotation") {
    const auto plus = parse_front("L1 L2 R1 R1 O1+");
    const auto minus = parse_front("L1 L2 R1 R1 O1-");
    CHECK(thurston_bennequin(plus) == -2);
    const int r = rotation_number(plus);
    CHECK((r == 1 || r == -1));
    CHECK(rotation_number(minus) == -r);
    CHECK(rotation_number(reverse(plus)) == -r);
    CHECK(thurston_bennequin(reverse(plus)) == -2);
    CHECK_THROWS_AS(rotation_number(parse_front("L1 L2 R1 R1")), Error);
    CHECK(parse_front(plus.to_string()) == plus);
  }

  TEST_CASE("torus-knot fronts") {
    for (int p = 2; p <= 8; ++p) {
      const auto f = torus_knot_front(p + 1, p);
      REQUIRE(analyze(f).components.size() == 1);
      CHECK(thurston_bennequin(f) == p * p - p - 1);
      CHECK(thurston_bennequin(f) == max_tb_torus_knot(p + 1, p));
      CHECK(seifert_genus_torus_knot(p + 1, p) == p * (p - 1) / 2);
      CHECK(rotation_number(f) == 0);
    }
    CHECK(max_tb_torus_knot(3, 2) == 1);
    CHECK(seifert_genus_torus_knot(3, 2) == 1);
    CHECK(max_tb_torus_knot(2, 3) == max_tb_torus_knot(3, 2));
    CHECK(seifert_genus_torus_knot(2, 5) == seifert_genus_torus_knot(5, 2));
    CHECK(thurston_bennequin(torus_knot_front(2, 5)) == 3);
    CHECK_THROWS_AS(torus_knot_front(2, 4), Error);
    CHECK_THROWS_AS(max_tb_torus_knot(1, 3), Error);
  }

  TEST_CASE("Stein framing check") {
    HandleDecomposition d("t");
    d.add_two_handle("k", BigInt(0));
    auto r = stein_check(d, {{"k", torus_knot_front(3, 2)}});
    CHECK(r.ok);
    REQUIRE(r.verdicts.size() == 1);
    CHECK(r.verdicts[0].tb == 1);

    r = stein_check(d, {{"k", parse_front("L1 R1")}});
    CHECK_FALSE(r.ok);
    CHECK(r.verdicts[0].tb == -1);

    for (int p = 2; p <= 6; ++p) {
      HandleDecomposition w("w");
      w.add_two_handle("w", BigInt(p * p - p - 2));
      CHECK(stein_check(w, {{"w", torus_knot_front(p + 1, p)}}).ok);
    }
    CHECK_THROWS_AS(stein_check(d, {}), Error);
    CHECK_THROWS_AS(stein_check(d, {{"k", torus_knot_front(3, 2)}, {"x", parse_front("L1 R1")}}),
                    UnknownHandle);
  }

  TEST_CASE("catalog Stein diagrams pass") {
    CHECK(stein_check(catalog::stein_S().diagram, catalog::stein_S().fronts).ok);
    for (int p = 2; p <= 5; ++p) {
      const auto a = catalog::stein_D_tilde_sum({p, p + 1});
      CHECK(stein_check(a.diagram, a.fronts).ok);
    }
    for (int n = 2; n <= 5; ++n) {
      const auto a = catalog::stein_N_tilde(n);
      CHECK(stein_check(a.diagram, a.fronts).ok);
    }
    const auto w = catalog::stein_W_sum({1, 2, 3});
    CHECK(stein_check(w.diagram, w.fronts).ok);
  }
}
