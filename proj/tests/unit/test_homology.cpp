#include <doctest.h>

#include <random>

#include "checks/oracles.hpp"
#include "handlecalc/catalog.hpp"
#include "handlecalc/homology.hpp"

using namespace handlecalc;

namespace {

IntegerMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  const auto r = static_cast<Index>(rows.size());
  const auto c = r == 0 ? Index(0) : static_cast<Index>(rows.begin()->size());
  IntegerMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (long v : row) m(i, j++) = BigInt(v);
    ++i;
  }
  return m;
}

oracle::Grid grid(const IntegerMatrix& m) {
  oracle::Grid g(static_cast<std::size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) g[static_cast<std::size_t>(i)].push_back(m(i, j).convert_to<long>());
  return g;
}

void check_smith(const IntegerMatrix& m) {
  const auto snf = smith_normal_form(m);
  CHECK(snf.U * m * snf.V == snf.S);
  CHECK(abs(determinant(snf.U)) == 1);
  CHECK(abs(determinant(snf.V)) == 1);
  const auto d = snf.diagonal();
  oracle::Int product = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    product *= d[i].convert_to<long>();
    CHECK(product == oracle::gcd_of_minors(grid(m), static_cast<int>(i + 1)));
  }
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("Smith normal form examples") {
    auto snf = smith_normal_form(mat({{2, 0}, {0, 3}}));
    CHECK(snf.S == mat({{1, 0}, {0, 6}}));
    snf = smith_normal_form(mat({{0, 2}, {2, 1}}));
    CHECK(snf.S == mat({{1, 0}, {0, 4}}));
    snf = smith_normal_form(IntegerMatrix::Zero(3, 2).eval());
    CHECK(snf.S.isZero());
    CHECK(snf.U == IntegerMatrix::Identity(3, 3));
    CHECK(snf.V == IntegerMatrix::Identity(2, 2));
    CHECK(snf.rank == 0);
  }

  TEST_CASE("Smith normal form on random and rectangular input") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-12, 12), size(1, 5);
    for (int trial = 0; trial < 150; ++trial) {
      IntegerMatrix m(size(rng), size(rng));
      for (Index i = 0; i < m.size(); ++i) m(i) = BigInt(entry(rng));
      check_smith(m);
    }
    check_smith(mat({{6, 4, 10}}));
    check_smith(mat({{6}, {4}, {10}}));
    check_smith(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
  }

  TEST_CASE("Hermite form, kernel, determinant, inverse") {
    const IntegerMatrix a = mat({{2, 4, 6}, {1, 2, 3}, {0, 1, 5}});
    const auto h = hermite_normal_form(a);
    CHECK(h.W * a == h.H);
    CHECK(abs(determinant(h.W)) == 1);
    CHECK(h.rank == 2);
    const IntegerMatrix k = integer_kernel_basis(a);
    CHECK(k.cols() == 1);
    CHECK((a * k).isZero());
    CHECK(gcd_of(IntegerVector(k.col(0))) == 1);
    CHECK(determinant(mat({{2, 1}, {7, 4}})) == 1);
    CHECK(determinant(a) == 0);
    const RationalMatrix inv = inverse(to_rational(mat({{2, 1}, {7, 4}})));
    CHECK(inv(0, 0) == 4);
    CHECK(inv(1, 0) == -7);
  }

  TEST_CASE("inertia by congruence matches eigenvalues") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
      IntegerMatrix m(5, 5);
      for (Index i = 0; i < 5; ++i)
        for (Index j = i; j < 5; ++j) m(i, j) = m(j, i) = BigInt(entry(rng));
      const auto in = inertia(m);
      CHECK(in.positive + in.negative + in.zero == 5);
      CHECK(in.signature() == oracle::eigen_signature(grid(m)));
    }
  }

  TEST_CASE("cokernel") {
    const auto g = cokernel(mat({{2, 0}, {0, 3}, {0, 0}}));
    CHECK(g.free_rank == 1);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 6);
    CHECK_FALSE(g.order().has_value());
    CHECK(cokernel(IntegerMatrix(0, 0)).is_trivial());
    CHECK(cokernel(IntegerMatrix(2, 0)).free_rank == 2);
  }

  TEST_CASE("W_n is homology trivial with S^3-like boundary") {
    for (int n = 1; n <= 5; ++n) {
      const auto w = catalog::build_Wn(n);
      const auto h = homology(w);
      CHECK(h.h1.is_trivial());
      CHECK(h.h2_rank == 0);
      CHECK(boundary_first_homology(w).is_trivial());
      CHECK(is_homology_trivial(w));
    }
    CHECK(is_homology_trivial(catalog::build_Wsum({1, 4, 2})));
  }

  TEST_CASE("single -4 handle is the C_2 profile") {
    HandleDecomposition d("c2");
    d.add_two_handle("u", BigInt(-4));
    const auto h = homology(d);
    CHECK(h.h2_rank == 1);
    CHECK(h.intersection_form == mat({{-4}}));
    CHECK(h.inertia.negative == 1);
    CHECK(boundary_first_homology(d).order() == BigInt(4));
    CHECK_FALSE(is_homology_trivial(catalog::build_Cp(2)));
  }

  TEST_CASE("lens-space boundaries") {
    for (int p = 2; p <= 10; ++p) {
      const auto c = boundary_first_homology(catalog::build_Cp(p));
      REQUIRE(c.torsion.size() == 1);
      CHECK(c.torsion[0] == BigInt(p * p));
      CHECK(boundary_first_homology(catalog::build_Bp(p)).order() == BigInt(p * p));
      const auto hb = homology(catalog::build_Bp(p));
      CHECK(hb.h2_rank == 0);
      REQUIRE(hb.h1.torsion.size() == 1);
      CHECK(hb.h1.torsion[0] == BigInt(p));
    }
  }

  TEST_CASE("N_n has H_2 = Z generated by alpha") {
    for (int n = 2; n <= 5; ++n) {
      const auto mn = catalog::build_Mn_Nn(n);
      const auto h = homology(mn.n);
      CHECK(h.h1.is_trivial());
      CHECK(h.h2_rank == 1);
      const IntegerMatrix r = mn.n.run_through_matrix();
      CHECK((r.transpose() * mn.alpha).isZero());
      CHECK(homology(mn.m).h2_rank == 1);
      CHECK(boundary_first_homology(mn.slid) == boundary_first_homology(mn.n));
    }
  }

  TEST_CASE("boundary presentation layout") {
    const auto p = boundary_presentation(catalog::build_Wn(3));
    CHECK(p == mat({{0, 1}, {1, 0}}));
    CHECK(boundary_presentation(catalog::build_Bp(3)) == mat({{2, 3}, {3, 0}}));
  }
}
