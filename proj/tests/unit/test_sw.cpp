#include <doctest.h>

#include "handlecalc/catalog.hpp"
#include "handlecalc/sw.hpp"

using namespace handlecalc;

namespace {

IntegerVector vec(std::initializer_list<long> v) {
  IntegerVector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (long x : v) out(i++) = BigInt(x);
  return out;
}

IntegerMatrix hyperbolic_sum(int copies) {
  IntegerMatrix q = IntegerMatrix::Zero(2 * copies, 2 * copies);
  for (int i = 0; i < copies; ++i) q(2 * i, 2 * i + 1) = q(2 * i + 1, 2 * i) = 1;
  return q;
}

// 3H with b2+ = 3, e = 8, sigma = 0 and beta = {K, -K}, K^2 = 16, d = 0.
sw::ModelWithClasses three_h() {
  sw::ModelWithClasses m;
  m.model = simply_connected_model(IntersectionLattice(hyperbolic_sum(3)));
  const IntegerVector k = vec({2, 2, 2, 2, 0, 0});
  m.classes.add(k);
  m.classes.add(IntegerVector(-k));
  return m;
}

ManifoldModel bare(long euler, long signature) {
  ManifoldModel m;
  m.euler = euler;
  m.signature = signature;
  return m;
}

}  // namespace

TEST_SUITE("sw") {
  TEST_CASE("characteristic classes") {
    IntegerMatrix q(1, 1);
    q(0, 0) = -1;
    CHECK(sw::is_characteristic(IntersectionLattice(q), vec({1})));
    CHECK_FALSE(sw::is_characteristic(IntersectionLattice(q), vec({0})));
    q(0, 0) = -4;
    CHECK(sw::is_characteristic(IntersectionLattice(q), vec({2})));
    CHECK_FALSE(sw::is_characteristic(IntersectionLattice(q), vec({1})));
  }

  TEST_CASE("d-invariant") {
    const auto odd = sw::d_invariant(bare(2, 0), IntegerVector(0));
    CHECK(odd.value == -1);
    CHECK_FALSE(odd.even);
    const auto k3 = sw::d_invariant(bare(24, -16), IntegerVector(0));
    CHECK(k3.value == 0);
    CHECK(k3.even);
    CHECK_THROWS_AS(sw::d_invariant(bare(3, 0), IntegerVector(0)), ModelError);

    IntegerMatrix q(1, 1);
    q(0, 0) = -4;
    ManifoldModel c2;
    c2.lattice = IntersectionLattice(q);
    CHECK_THROWS_AS(sw::d_invariant(c2, vec({2})), ModelError);  // K^2 = -1
  }

  TEST_CASE("simple type") {
    BasicClassSet empty;
    CHECK(sw::is_simple_type(bare(4, 0), empty));
    BasicClassSet zero;
    zero.add(IntegerVector(0));
    CHECK(sw::is_simple_type(bare(24, -16), zero));
    CHECK(sw::is_simple_type(bare(24, -16), zero, sw::SimpleTypePredicate::Literal));

    ManifoldModel m = bare(4, 0);
    m.lattice = IntersectionLattice(hyperbolic_sum(1));
    BasicClassSet one;
    one.add(vec({2, 1}));  // K^2 = 4, d = -1
    CHECK_FALSE(sw::is_simple_type(m, one));
    CHECK_FALSE(sw::is_simple_type(m, one, sw::SimpleTypePredicate::Literal));

    const auto t = three_h();
    CHECK(sw::is_simple_type(t.model, t.classes));
    CHECK_FALSE(sw::is_simple_type(t.model, t.classes, sw::SimpleTypePredicate::Literal));
  }

  TEST_CASE("blow-up formula") {
    const auto t = three_h();
    const auto once = sw::blow_up_basic_classes(t.model, t.classes, 1);
    CHECK(once.classes.size() == 4);
    CHECK(once.classes.is_negation_closed());
    CHECK(once.model.lattice.rank() == 7);
    CHECK(once.model.lattice.has_name("E1"));
    CHECK(once.model.euler == t.model.euler + 1);
    CHECK(once.model.signature == t.model.signature - 1);
    for (const auto& [k, w] : once.classes.classes()) {
      CHECK(sw::d_invariant(once.model, k).value == 0);
      CHECK(sw::is_characteristic(once.model.lattice, k));
    }
    const auto twice = sw::blow_up_basic_classes(once.model, once.classes, 1);
    CHECK(twice.model.lattice.has_name("E2"));
    CHECK(twice.classes == sw::blow_up_basic_classes(t.model, t.classes, 2).classes);

    const auto none = sw::blow_up_basic_classes(t.model, t.classes, 0);
    CHECK(none.classes == t.classes);
    CHECK(none.model.lattice.rank() == t.model.lattice.rank());

    CHECK_THROWS_AS(sw::blow_up_basic_classes(t.model, BasicClassSet(), 1), ModelError);
    CHECK_THROWS_AS(sw::blow_up_basic_classes(t.model, t.classes, -1), ModelError);
    ManifoldModel small = t.model;
    small.b2plus = 1;
    CHECK_THROWS_AS(sw::blow_up_basic_classes(small, t.classes, 1), ModelError);
  }

  TEST_CASE("adjunction inequality") {
    const auto t = three_h();
    const IntegerVector torus = vec({1, 0, 0, 0, 0, 0});
    auto r = sw::adjunction_check(t.model, t.classes, torus, 1);
    CHECK_FALSE(r.ok);
    CHECK(r.violators.size() == 2);
    CHECK(sw::adjunction_check(t.model, t.classes, torus, 2).ok);
    CHECK(sw::adjunction_check(t.model, t.classes, IntegerVector::Zero(6), 1).ok);
    CHECK(sw::adjunction_check(t.model, t.classes, vec({0, 0, 0, 0, 1, 0}), 1).ok);
    CHECK_THROWS_AS(sw::adjunction_check(t.model, t.classes, torus, 0), ModelError);
    CHECK_THROWS_AS(
        sw::adjunction_check(t.model, t.classes, torus, 1, sw::SimpleTypePredicate::Literal), ModelError);
  }

  TEST_CASE("adjunction forces <K, w> = 0 on the X_0 model") {
    for (int p = 2; p <= 5; ++p) {
      const auto x0 = catalog::build_X0_model({p}, 2);
      const IntegerVector w = x0.data.model.lattice.named("w1");
      CHECK(x0.data.model.lattice.square(w) == BigInt(p * p - p - 2));
      CHECK(sw::adjunction_check(x0.data.model, x0.data.classes, w, p * (p - 1) / 2).ok);
      for (const auto& [k, wt] : x0.data.classes.classes()) CHECK(k.dot(w) == 0);
    }
  }

  TEST_CASE("minimal genus bound") {
    const auto t = three_h();
    for (int n = 2; n <= 6; ++n) {
      const IntegerVector alpha = vec({n - 1, 0, 0, 0, 0, 0});
      const auto b = sw::min_genus_bound(t.model, t.classes, alpha);
      CHECK(b.applicable);
      CHECK(b.max_pairing == BigInt(2 * n - 2));
      CHECK(b.genus == n);
    }
    CHECK(sw::min_genus_bound(t.model, t.classes, vec({0, 0, 0, 0, 1, 0})).genus == 1);
    const auto negative = sw::min_genus_bound(t.model, t.classes, vec({0, 0, 0, 0, 1, -1}));
    CHECK_FALSE(negative.applicable);

    BasicClassSet zero;
    zero.add(IntegerVector(0));
    ManifoldModel k3 = bare(24, -16);
    k3.b2plus = 3;
    CHECK(sw::min_genus_bound(k3, zero, IntegerVector(0)).genus == 1);
  }

  TEST_CASE("lift eligibility") {
    CHECK(sw::rbd_lift_eligible(vec({2, 0}), {vec({1, 0})}));
    CHECK(sw::rbd_lift_eligible(vec({0, 3}), {vec({1, 0}), vec({0, 1})}));
    CHECK(sw::rbd_lift_eligible(vec({0, -3}), {vec({1, 0}), vec({0, 1})}));
    CHECK_FALSE(sw::rbd_lift_eligible(vec({1, 3}), {vec({1, 0}), vec({0, 1})}));
    CHECK_FALSE(sw::rbd_lift_eligible(vec({0, 2}), {vec({1, 0}), vec({0, 1})}));
  }

  TEST_CASE("rational blowdown descent") {
    for (int p = 2; p <= 5; ++p) {
      const auto x0 = catalog::build_X0_model({p}, 2);
      const auto chain = x0.chain(0);
      for (const auto& [k, w] : x0.data.classes.classes()) CHECK(sw::rbd_lift_eligible(k, chain));
      const auto d = sw::rational_blowdown_descend(x0.data.model, x0.data.classes, chain);
      CHECK(d.result.classes.size() == x0.data.classes.size());
      CHECK(d.lifts.size() == x0.data.classes.size());
      CHECK(d.result.model.lattice.rank() == x0.data.model.lattice.rank() - (p - 1));
      CHECK(d.result.model.euler == x0.data.model.euler - (p - 1));
      CHECK(d.result.model.signature == x0.data.model.signature + (p - 1));
      CHECK(sw::is_simple_type(d.result.model, d.result.classes));
      const auto up = sw::blow_up_basic_classes(d.result.model, d.result.classes, p - 1);
      CHECK(up.classes.size() == (std::size_t{1} << (p - 1)) * x0.data.classes.size());

      const auto empty = sw::rational_blowdown_descend(x0.data.model, BasicClassSet(), chain);
      CHECK(empty.result.classes.empty());

      BasicClassSet bad;
      IntegerVector k = x0.data.classes.classes().begin()->first;
      k += IntegerVector(BigInt(2) * x0.data.model.lattice.dual(chain.back()));
      bad.add(k);
      CHECK_THROWS_AS(sw::rational_blowdown_descend(x0.data.model, bad, chain), ModelError);
    }
    const auto x0 = catalog::build_X0_model({3}, 2);
    auto chain = x0.chain(0);
    std::swap(chain[0], chain[1]);
    CHECK_THROWS_AS(sw::rational_blowdown_descend(x0.data.model, x0.data.classes, chain), ModelError);
  }

  TEST_CASE("orthogonal complement") {
    const auto x0 = catalog::build_X0_model({3}, 2);
    const auto& l = x0.data.model.lattice;
    const auto chain = x0.chain(0);
    const IntegerMatrix c = sw::orthogonal_complement(l, chain);
    CHECK(c.cols() == l.rank() - 2);
    for (Index j = 0; j < c.cols(); ++j)
      for (const auto& u : chain) CHECK(l.pair(IntegerVector(c.col(j)), u) == 0);
  }

  TEST_CASE("knot surgery") {
    const auto m = catalog::knotted_model();
    const IntegerVector torus = m.model.lattice.named("T");
    CHECK(sw::knot_surgery_basic_classes(m.model, m.classes, torus, LaurentPolynomial::monomial(0)) ==
          m.classes);

    const auto trefoil = sw::knot_surgery_basic_classes(m.model, m.classes, torus, alexander_polynomial_torus(3, 2));
    CHECK(trefoil.size() == 3 * m.classes.size());
    const IntegerVector shift = BigInt(2) * m.model.lattice.dual(torus);
    for (const auto& [k, w] : m.classes.classes()) {
      CHECK(trefoil.weight(k) == -w);
      CHECK(trefoil.weight(IntegerVector(k + shift)) == w);
      CHECK(trefoil.weight(IntegerVector(k - shift)) == w);
    }
    const auto cinquefoil =
        sw::knot_surgery_basic_classes(m.model, m.classes, torus, alexander_polynomial_torus(5, 2));
    CHECK(cinquefoil != trefoil);
    CHECK(sw::knot_surgery_basic_classes(m.model, BasicClassSet(), torus, alexander_polynomial_torus(3, 2)).empty());

    CHECK_THROWS_AS(sw::knot_surgery_basic_classes(m.model, m.classes, m.model.lattice.named("s"),
                                                   alexander_polynomial_torus(3, 2)),
                    ModelError);
    CHECK_THROWS_AS(sw::knot_surgery_basic_classes(m.model, m.classes, IntegerVector(BigInt(2) * torus),
                                                   alexander_polynomial_torus(3, 2)),
                    ModelError);
  }
}
