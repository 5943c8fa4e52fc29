#include <doctest.h>

#include "checks/oracles.hpp"

using namespace handlecalc::oracle;

TEST_SUITE("oracles") {
  TEST_CASE("determinants and minors") {
    CHECK(laplace_determinant({{2, 1}, {7, 4}}) == 1);
    CHECK(laplace_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
    CHECK(laplace_determinant({}) == 1);
    CHECK(gcd_of_minors({{2, 0}, {0, 3}}, 1) == 1);
    CHECK(gcd_of_minors({{2, 0}, {0, 3}}, 2) == 6);
    CHECK(gcd_of_minors({{0, 0}, {0, 0}}, 1) == 0);
  }

  TEST_CASE("continued fractions") {
    CHECK(continued_fraction_numerator({-4}) == 4);
    CHECK(continued_fraction_numerator({-5, -2}) == 9);
    CHECK(continued_fraction_numerator({-6, -2, -2}) == 16);
  }

  TEST_CASE("sign enumeration") {
    const auto s = sign_enumeration({{2}, {-2}}, 1);
    CHECK(s.size() == 4);
    CHECK(s.count({2, 1}) == 1);
    CHECK(s.count({-2, -1}) == 1);
    CHECK(sign_enumeration({{0}}, 0).size() == 1);
  }

  TEST_CASE("torus Alexander by division") {
    CHECK(torus_alexander_by_division(2, 3) == std::vector<Int>{1, -1, 1});
    CHECK(torus_alexander_by_division(2, 5) == std::vector<Int>{1, -1, 1, -1, 1});
  }

  TEST_CASE("eigen signature") {
    CHECK(eigen_signature({{0, 1}, {1, 0}}) == 0);
    CHECK(eigen_signature({{-1, 0}, {0, -1}}) == -2);
    CHECK(eigen_signature({{2, 1}, {1, 2}}) == 2);
  }
}
