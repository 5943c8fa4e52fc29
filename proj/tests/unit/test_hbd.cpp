#include <doctest.h>

#include "handlecalc/catalog.hpp"
#include "handlecalc/hbd.hpp"
#include "handlecalc/homology.hpp"

using namespace handlecalc;

TEST_SUITE("hbd") {
  TEST_CASE("W_1 document") {
    const auto doc = hbd::parse_hbd("manifold W1\n1h a\n2h k framing 0\nrt k a 1\n");
    CHECK(doc.name == "W1");
    CHECK(is_homology_trivial(doc.decomposition));
    CHECK(hbd::parse_hbd(hbd::print_hbd(doc)) == doc);
  }

  TEST_CASE("errors") {
    try {
      hbd::parse_hbd("2h k framing 0\nlk k k 1");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("self-linking forbidden") != std::string::npos);
      CHECK(e.line() == 2);
    }
    try {
      hbd::parse_hbd("");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("missing manifold header") != std::string::npos);
    }
    CHECK_THROWS_AS(hbd::parse_hbd("# only a comment\n"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\nmanifold b"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("1h a\nmanifold b"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\n2h k framing x"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\n2h k frame 1"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\nrt k a 1"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\n1h a\n1h a"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\n2h 9k framing 1"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\nwhat"), ParseError);
    CHECK_THROWS_AS(hbd::parse_hbd("manifold a\n3h -1"), ParseError);
    try {
      hbd::parse_hbd("manifold a\n2h k framing 0\nfront k : L1 R2");
      FAIL("expected an error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 14);
    }
  }

  TEST_CASE("redefined link warns and last write wins") {
    const auto doc = hbd::parse_hbd("manifold a\n2h k framing 0\n2h j framing 1\nlk k j 2\nlk j k 3\n");
    CHECK(doc.decomposition.link("k", "j") == 3);
    REQUIRE(doc.warnings.size() == 1);
    CHECK(doc.warnings[0].find("line 5") != std::string::npos);
  }

  TEST_CASE("comments, fronts and 3-handles") {
    const std::string text =
        "# header comment\n"
        "manifold Stein sample   # trailing\n"
        "2h k framing 0\n"
        "front k : L1 L2 X3 X3 X3 R2 R1\n"
        "3h 2\n";
    const auto doc = hbd::parse_hbd(text, "x.hbd");
    CHECK(doc.name == "Stein sample");
    CHECK(doc.source_path == "x.hbd");
    CHECK(doc.decomposition.three_handle_count() == 2);
    CHECK(legendrian::stein_check(doc.decomposition, doc.fronts).ok);
    const std::string canonical = hbd::print_hbd(doc);
    CHECK(hbd::print_hbd(hbd::parse_hbd(canonical)) == canonical);
    CHECK(hbd::parse_hbd(canonical) == doc);
  }

  TEST_CASE("round trip of catalog diagrams") {
    std::vector<catalog::AnnotatedDiagram> models{catalog::stein_S(), catalog::stein_D_tilde_sum({2, 3}),
                                                  catalog::stein_N_tilde(3)};
    models.push_back({catalog::build_Dp(4), {}});
    models.push_back({catalog::build_Mn_Nn(3).slid, {}});
    for (const auto& m : models) {
      const std::string text = hbd::print_hbd(m.diagram, m.fronts);
      const auto doc = hbd::parse_hbd(text);
      CHECK(doc.decomposition == m.diagram);
      CHECK(doc.fronts == m.fronts);
      CHECK(hbd::print_hbd(doc) == text);
    }
  }

  TEST_CASE("files") {
    const auto doc = hbd::read_hbd_file(std::string(HANDLECALC_TEST_DATA) + "/c3.hbd");
    CHECK(boundary_first_homology(doc.decomposition).order() == BigInt(9));
    CHECK_THROWS_AS(hbd::read_hbd_file("/nonexistent/file.hbd"), Error);
  }
}
