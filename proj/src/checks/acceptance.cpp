#include "checks/acceptance.hpp"

#include <Eigen/LU>
#include <chrono>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "checks/oracles.hpp"
#include "handlecalc/catalog.hpp"
#include "handlecalc/homology.hpp"

namespace handlecalc::acceptance {

namespace {

using oracle::Grid;
using oracle::Int;
using Rng = std::mt19937_64;

struct Outcome {
  bool correct = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && correct) {
      correct = false;
      detail = what;
    }
  }
};

Int small(const BigInt& x) {
  auto v = to_int64(x);
  if (!v) throw std::overflow_error("entry does not fit in 64 bits: " + x.str());
  return *v;
}

Grid to_grid(const IntegerMatrix& m) {
  Grid g(static_cast<std::size_t>(m.rows()), std::vector<Int>(static_cast<std::size_t>(m.cols())));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = small(m(i, j));
  return g;
}

std::vector<Int> to_ints(const IntegerVector& v) {
  std::vector<Int> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(small(v(i)));
  return out;
}

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

// Square of a class computed in floating point, independent of the exact inverse.
double float_class_square(const IntegerMatrix& q, const IntegerVector& k) {
  const auto n = q.rows();
  Eigen::MatrixXd qd(n, n);
  Eigen::VectorXd kd(n);
  for (Index i = 0; i < n; ++i) {
    kd(i) = static_cast<double>(small(k(i)));
    for (Index j = 0; j < n; ++j) qd(i, j) = static_cast<double>(small(q(i, j)));
  }
  return kd.dot(qd.fullPivLu().solve(kd));
}

double float_d(const ManifoldModel& m, const IntegerVector& k) {
  return (float_class_square(m.lattice.pairing(), k) - 2.0 * static_cast<double>(small(m.euler)) -
          3.0 * static_cast<double>(small(m.signature))) /
         4.0;
}

Index basis_index(const IntersectionLattice& lattice, const std::string& name) {
  const IntegerVector& v = lattice.named(name);
  for (Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return i;
  }
  throw std::logic_error("named vector is zero");
}

HandleDecomposition random_diagram(Rng& rng, int max_handles) {
  const int n1 = static_cast<int>(uniform(rng, 0, 2));
  const int n2 = static_cast<int>(uniform(rng, 2, max_handles - n1));
  HandleDecomposition d("random");
  for (int j = 0; j < n1; ++j) d.add_one_handle("h" + std::to_string(j));
  for (int i = 0; i < n2; ++i) {
    const std::string k = "k" + std::to_string(i);
    d.add_two_handle(k, BigInt(uniform(rng, -4, 4)));
    for (int j = 0; j < i; ++j) d.set_link(k, "k" + std::to_string(j), BigInt(uniform(rng, -2, 2)));
    for (int j = 0; j < n1; ++j) d.set_run_through(k, "h" + std::to_string(j), BigInt(uniform(rng, -2, 2)));
  }
  return d;
}

Outcome lens_orders() {
  Outcome o;
  for (int p = 2; p <= 10; ++p) {
    const Int p2 = Int(p) * p;
    const auto cp = catalog::build_Cp(p);
    const auto group = boundary_first_homology(cp);
    o.require(group.order() == BigInt(p2) && group.torsion.size() == 1,
              "C" + std::to_string(p) + " boundary is not cyclic of order p^2");
    std::vector<Int> fraction{-(p + 2)};
    for (int j = 1; j < p - 1; ++j) fraction.push_back(-2);
    o.require(oracle::continued_fraction_numerator(fraction) == p2,
              "continued fraction disagrees for p = " + std::to_string(p));
    const Int det = oracle::laplace_determinant(to_grid(boundary_presentation(cp)));
    o.require(det == p2 || det == -p2, "C_p presentation determinant");

    const auto bp = catalog::build_Bp(p);
    o.require(boundary_first_homology(bp).order() == BigInt(p2),
              "B" + std::to_string(p) + " boundary order");
    const Int bdet = oracle::laplace_determinant(to_grid(boundary_presentation(bp)));
    o.require(bdet == -p2, "B_p presentation determinant");
  }
  return o;
}

Outcome cork_homology(Rng& rng) {
  Outcome o;
  auto check = [&](const HandleDecomposition& d) {
    o.require(is_homology_trivial(d), d.name() + " has nontrivial homology");
    const Grid r = to_grid(d.run_through_matrix());
    const Int det = r.size() == r[0].size() ? oracle::laplace_determinant(r) : 0;
    o.require(det == 1 || det == -1, d.name() + ": run-through matrix is not unimodular");
  };
  for (int n = 1; n <= 10; ++n) check(catalog::build_Wn(n));
  for (int a = 1; a <= 5; ++a) {
    check(catalog::build_Wsum({a}));
    for (int b = 1; b <= 5; ++b) {
      check(catalog::build_Wsum({a, b}));
      for (int c = 1; c <= 5; ++c) check(catalog::build_Wsum({a, b, c}));
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> ks(static_cast<std::size_t>(uniform(rng, 4, 10)));
    for (auto& k : ks) k = static_cast<int>(uniform(rng, 1, 5));
    check(catalog::build_Wsum(ks));
  }
  return o;
}

Outcome blow_up_formula(Rng& rng) {
  Outcome o;
  const auto base = catalog::synthetic_closed_model(IntegerMatrix(0, 0), 0, 0);
  const Index r = base.model.lattice.rank();
  for (int trial = 0; trial < 60; ++trial) {
    const int half = static_cast<int>(uniform(rng, 1, 4));
    BasicClassSet beta;
    std::vector<std::vector<Int>> raw;
    while (static_cast<int>(beta.size()) < 2 * half) {
      IntegerVector k(r);
      for (Index i = 0; i < r; ++i) k(i) = BigInt(2 * uniform(rng, -3, 3));
      if (k.isZero() || beta.contains(k)) continue;
      beta.add(k);
      beta.add(IntegerVector(-k));
      raw.push_back(to_ints(k));
      raw.push_back(to_ints(IntegerVector(-k)));
    }
    const int n = static_cast<int>(uniform(rng, 0, 6));
    const auto blown = sw::blow_up_basic_classes(base.model, beta, n);
    o.require(blown.classes.size() == (std::size_t{1} << n) * beta.size(), "count is not 2^n |beta|");
    o.require(blown.classes.is_negation_closed(), "blown-up set is not closed under negation");
    std::set<std::vector<Int>> got;
    for (const auto& [k, w] : blown.classes.classes()) {
      got.insert(to_ints(k));
      o.require(sw::is_characteristic(blown.model.lattice, k), "blown-up class not characteristic");
    }
    o.require(got == oracle::sign_enumeration(raw, n), "sign enumeration oracle disagrees");
  }
  return o;
}

Outcome count_lemma() {
  Outcome o;
  for (int seeds : {2, 4}) {
    for (int p = 2; p <= 6; ++p) {
      const auto c = catalog::verify_count_lemma({p}, 0, seeds);
      o.require(c.ok && c.n0 == static_cast<std::size_t>(seeds),
                "p = " + std::to_string(p) + ", N0 = " + std::to_string(seeds) +
                    ": Ni = " + std::to_string(c.ni));
    }
    const std::vector<int> ps{2, 3, 4};
    for (std::size_t i = 0; i < ps.size(); ++i) {
      const auto c = catalog::verify_count_lemma(ps, i, seeds);
      o.require(c.ok, "multi-chain count fails at chain " + std::to_string(i + 1));
    }
  }
  return o;
}

Outcome restriction_lemma() {
  Outcome o;
  for (int seeds : {2, 4}) {
    for (int p = 2; p <= 6; ++p) {
      const auto r = catalog::verify_restriction_lemma(p, seeds);
      const std::string tag = " (p = " + std::to_string(p) + ")";
      o.require(r.alpha_orthogonal, "alpha not orthogonal to the chain" + tag);
      o.require(r.alpha_pairing, "<K, alpha> != (1 - p) <K, e>" + tag);
      o.require(r.restrictions_distinct, "restrictions collide" + tag);
      o.require(r.alpha_distinguishes_sign, "alpha does not separate signs" + tag);
    }
  }
  return o;
}

Outcome stein_checks() {
  Outcome o;
  for (int p = 2; p <= 8; ++p) {
    const int tb = legendrian::thurston_bennequin(legendrian::torus_knot_front(p + 1, p));
    o.require(tb - 1 == p * p - p - 2, "tb of the (p+1,p) front, p = " + std::to_string(p));
  }
  const auto report = catalog::stein_scenario(8);
  for (const auto& c : report.checks) o.require(c.holds, c.claim);
  HandleDecomposition bad("bad");
  bad.add_two_handle("k", BigInt(0));
  o.require(!legendrian::stein_check(bad, {{"k", legendrian::parse_front("L1 R1")}}).ok,
            "0-framed unknot passed the Stein check");
  return o;
}

Outcome genus_obstruction() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    for (long k = -5; k <= 5; ++k) {
      const auto g = catalog::genus_obstruction_Nn(n, k);
      const long ak = k < 0 ? -k : k;
      // alpha^2 = 0 and each exceptional sign flip adds one to the pairing.
      o.require(g.ok && g.bound.genus == BigInt(ak * (n - 1) + 1) &&
                    g.bound.max_pairing == BigInt(ak * (2 * n - 2)),
                "n = " + std::to_string(n) + ", k = " + std::to_string(k));
      o.require(k == 0 || g.bound.genus >= n, "genus below n allowed for k != 0");
    }
  }
  return o;
}

Outcome knot_surgery() {
  Outcome o;
  const std::vector<catalog::TorusKnot> knots{{2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}};
  for (const auto& knot : knots) {
    const auto delta = alexander_polynomial_torus(knot.p, knot.q);
    const auto quotient = oracle::torus_alexander_by_division(knot.p, knot.q);
    const long half = static_cast<long>(quotient.size() - 1) / 2;
    std::map<long, BigInt> expected;
    for (std::size_t i = 0; i < quotient.size(); ++i) {
      if (quotient[i] != 0) expected[static_cast<long>(i) - half] = BigInt(quotient[i]);
    }
    const std::string tag = " for T(" + std::to_string(knot.p) + "," + std::to_string(knot.q) + ")";
    o.require(delta == LaurentPolynomial(expected), "division oracle disagrees" + tag);
    o.require(delta.at_one() == 1 || delta.at_one() == -1, "Delta(1) != +-1" + tag);
    o.require(delta.is_symmetric(), "Delta not symmetric" + tag);
  }
  const LaurentPolynomial trefoil({{-1, BigInt(1)}, {0, BigInt(-1)}, {1, BigInt(1)}});
  o.require(alexander_polynomial_torus(3, 2) == trefoil, "Delta of T(3,2) is not t - 1 + t^-1");
  const auto report = catalog::knotted_cork_scenario(knots);
  o.require(report.pairwise_distinct, "surgered basic class sets coincide");
  o.require(report.all_nonzero, "a surgered basic class set is empty");
  o.require(report.distinguished_from_x, "surgery does not separate from the vanishing model");
  return o;
}

Outcome move_invariance(Rng& rng) {
  Outcome o;
  int slides = 0;
  while (slides < 1000) {
    HandleDecomposition d = random_diagram(rng, 8);
    const AbelianGroup before = boundary_first_homology(d);
    for (int s = 0; s < 10; ++s, ++slides) {
      const auto& ids = d.two_handles();
      const auto a = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ids.size()) - 1));
      auto b = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(ids.size()) - 2));
      if (b >= a) ++b;
      d = handle_slide(d, ids[a], ids[b], uniform(rng, 0, 1) ? 1 : -1);
      o.require(boundary_first_homology(d) == before, "slide changed the boundary homology");
    }

    std::vector<std::pair<std::string, BigInt>> attachments;
    for (const auto& k : d.two_handles()) {
      if (uniform(rng, 0, 1)) attachments.emplace_back(k, BigInt(uniform(rng, -3, 3)));
    }
    const auto up = blow_up(d, attachments);
    const std::string e = up.two_handles().back();
    o.require(blow_down(up, e) == d, "blow-up/blow-down round trip is not the identity");
    o.require(boundary_first_homology(up) == before, "blow-up changed the boundary homology");
    const auto h_before = homology(d);
    const auto h_after = homology(up);
    o.require(h_after.h2_rank == h_before.h2_rank + 1 &&
                  h_after.inertia.signature() == h_before.inertia.signature() - 1,
              "blow-up did not add one negative class");
    o.require(oracle::eigen_signature(to_grid(h_after.intersection_form)) ==
                  h_after.inertia.signature(),
              "signature disagrees with the eigenvalue oracle");

    HandleDecomposition swappable = d;
    swappable.add_one_handle("hx");
    swappable.add_two_handle("kx", BigInt(0));
    swappable.set_run_through("kx", "hx", BigInt(uniform(rng, 1, 3)));
    for (const auto& k : d.two_handles()) {
      swappable.set_link("kx", k, BigInt(uniform(rng, -2, 2)));
      swappable.set_run_through(k, "hx", BigInt(uniform(rng, -2, 2)));
    }
    const auto twisted = dot_zero_swap(swappable, "hx", "kx");
    o.require(dot_zero_swap(twisted, "kx", "hx") == swappable, "dot-zero swap is not an involution");
    o.require(boundary_first_homology(twisted) == boundary_first_homology(swappable),
              "dot-zero swap changed the boundary homology");
  }
  return o;
}

Outcome smith_form(Rng& rng) {
  Outcome o;
  for (int trial = 0; trial < 500; ++trial) {
    const Index rows = uniform(rng, 1, 6);
    const Index cols = uniform(rng, 1, 6);
    IntegerMatrix m(rows, cols);
    if (trial % 4 == 3) {
      // Low rank: product of thin random factors.
      const Index inner = uniform(rng, 1, std::min(rows, cols));
      IntegerMatrix a(rows, inner), b(inner, cols);
      for (Index i = 0; i < a.size(); ++i) a(i) = BigInt(uniform(rng, -4, 4));
      for (Index i = 0; i < b.size(); ++i) b(i) = BigInt(uniform(rng, -4, 4));
      m = a * b;
    } else {
      for (Index i = 0; i < m.size(); ++i) m(i) = BigInt(uniform(rng, -9, 9));
    }
    const auto snf = smith_normal_form(m);
    o.require(snf.U * m * snf.V == snf.S, "U M V != S");
    const Int du = oracle::laplace_determinant(to_grid(snf.U));
    const Int dv = oracle::laplace_determinant(to_grid(snf.V));
    o.require((du == 1 || du == -1) && (dv == 1 || dv == -1), "transform is not unimodular");
    const Grid grid = to_grid(m);
    Int product = 1;
    const Index diag = std::min(rows, cols);
    for (Index i = 0; i < rows; ++i) {
      for (Index j = 0; j < cols; ++j) {
        if (i != j) o.require(snf.S(i, j) == 0, "S is not diagonal");
      }
    }
    for (Index i = 0; i < diag; ++i) {
      o.require(snf.S(i, i) >= 0, "negative invariant factor");
      if (i + 1 < diag) {
        o.require(snf.S(i, i) == 0 ? snf.S(i + 1, i + 1) == 0 : snf.S(i + 1, i + 1) % snf.S(i, i) == 0,
                  "divisibility chain broken");
      }
      product *= small(snf.S(i, i));
      o.require(product == oracle::gcd_of_minors(grid, static_cast<int>(i + 1)),
                "d_1...d_k differs from the gcd of k-minors");
    }
  }
  return o;
}

Outcome d_conservation(Rng& rng) {
  Outcome o;
  // Blow-up.
  const auto base = catalog::synthetic_closed_model(IntegerMatrix(0, 0), 0, 0);
  const IntegerMatrix& q = base.model.lattice.pairing();
  for (int trial = 0; trial < 20; ++trial) {
    IntegerVector k(q.rows());
    for (Index i = 0; i < k.size(); ++i) k(i) = BigInt(2 * uniform(rng, -3, 3) + (q(i, i) % 2 != 0 ? 1 : 0));
    const BigInt d = sw::d_invariant(base.model, k).value;
    o.require(std::abs(float_d(base.model, k) - static_cast<double>(small(d))) < 1e-6,
              "d disagrees with the floating-point oracle");
    BasicClassSet beta;
    beta.add(k);
    const int n = static_cast<int>(uniform(rng, 1, 3));
    const auto blown = sw::blow_up_basic_classes(base.model, beta, n);
    for (const auto& [kb, w] : blown.classes.classes()) {
      o.require(sw::d_invariant(blown.model, kb).value == d, "blow-up changed d");
      o.require(std::abs(float_d(blown.model, kb) - static_cast<double>(small(d))) < 1e-6,
                "blown-up d disagrees with the floating-point oracle");
    }
  }
  // Rational blowdown descent, with random eligible lifts.
  for (int p = 2; p <= 5; ++p) {
    const auto x0 = catalog::build_X0_model({p}, 2);
    const IntersectionLattice& lattice = x0.data.model.lattice;
    const IntegerMatrix& qx = lattice.pairing();
    for (int trial = 0; trial < 5; ++trial) {
      IntegerVector k(qx.rows());
      for (Index i = 0; i < k.size(); ++i)
        k(i) = BigInt(2 * uniform(rng, -2, 2) + (qx(i, i) % 2 != 0 ? 1 : 0));
      for (int j = 1; j <= p - 2; ++j) k(basis_index(lattice, "u1_" + std::to_string(j))) = 0;
      const BigInt ke = k(basis_index(lattice, "e1"));
      const long sign = uniform(rng, 0, 1) ? 1 : -1;
      k(basis_index(lattice, "w1")) = BigInt(p) * (ke + sign);
      o.require(sw::rbd_lift_eligible(k, x0.chain(0)), "constructed class is not eligible");
      BasicClassSet beta;
      beta.add(k);
      const auto descent = sw::rational_blowdown_descend(x0.data.model, beta, x0.chain(0));
      for (const auto& [k2, w] : descent.result.classes.classes()) {
        o.require(sw::d_invariant(descent.result.model, k2).value == sw::d_invariant(x0.data.model, k).value,
                  "descent changed d");
        o.require(std::abs(float_d(descent.result.model, k2) - float_d(x0.data.model, k)) < 1e-6,
                  "descended d disagrees with the floating-point oracle");
      }
    }
  }
  return o;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  struct Spec {
    int id;
    const char* name;
    double budget;
    std::function<Outcome(Rng&)> run;
  };
  const std::vector<Spec> specs = {
      {1, "lens-space orders of C_p and B_p", 1.0, [](Rng&) { return lens_orders(); }},
      {2, "cork homology of W_n and W(k_1..k_n)", 1.0, cork_homology},
      {3, "blow-up formula against sign enumeration", 5.0, blow_up_formula},
      {4, "count lemma N(X_i) = 2^(p-1) N(X_0)", 5.0, [](Rng&) { return count_lemma(); }},
      {5, "restriction lemma", 1.0, [](Rng&) { return restriction_lemma(); }},
      {6, "Stein framing checks", 1.0, [](Rng&) { return stein_checks(); }},
      {7, "genus obstruction", 1.0, [](Rng&) { return genus_obstruction(); }},
      {8, "knot surgery distinctness", 1.0, [](Rng&) { return knot_surgery(); }},
      {9, "move invariance", 10.0, move_invariance},
      {10, "Smith normal form", 10.0, smith_form},
      {11, "d-invariant conservation", 1.0, d_conservation},
  };
  std::vector<CriterionResult> results;
  for (const auto& spec : specs) {
    Rng rng(seed + static_cast<std::uint64_t>(spec.id));
    CriterionResult r;
    r.id = spec.id;
    r.name = spec.name;
    r.budget_seconds = spec.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = spec.run(rng);
      r.correct = o.correct;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.correct = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.correct && r.seconds >= r.budget_seconds) r.detail = "over the time budget";
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << " criterion " << std::setw(2) << r.id << "  " << r.name
      << "  (" << std::fixed << std::setprecision(3) << r.seconds << " s of " << std::setprecision(1)
      << r.budget_seconds << " s)";
  if (!r.detail.empty()) out << "  " << r.detail;
  return out.str();
}

}  // namespace handlecalc::acceptance
