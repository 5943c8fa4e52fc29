#include "handlecalc/catalog.hpp"

#include <set>
#include <stdexcept>

#include "handlecalc/homology.hpp"

namespace handlecalc::catalog {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

std::string u_id(int j) { return "u" + std::to_string(j); }

const legendrian::FrontDiagram& trefoil_front() {
  static const legendrian::FrontDiagram f = legendrian::torus_knot_front(2, 3);
  return f;
}

const legendrian::FrontDiagram& unknot_front() {
  static const legendrian::FrontDiagram f = legendrian::parse_front("L1 R1");
  return f;
}

}  // namespace

std::vector<std::string> cp_chain_ids(int p) {
  std::vector<std::string> ids;
  for (int j = p - 1; j >= 1; --j) ids.push_back(u_id(j));
  return ids;
}

HandleDecomposition build_Cp(int p) {
  require(p >= 2, "C_p needs p >= 2");
  HandleDecomposition d("C" + std::to_string(p));
  const auto ids = cp_chain_ids(p);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    d.add_two_handle(ids[i], i == 0 ? BigInt(-(p + 2)) : BigInt(-2));
    if (i > 0) d.set_link(ids[i - 1], ids[i], BigInt(1));
  }
  return d;
}

HandleDecomposition build_Bp(int p) {
  require(p >= 2, "B_p needs p >= 2");
  HandleDecomposition d("B" + std::to_string(p));
  d.add_one_handle("b0");
  d.add_two_handle("b1", BigInt(p - 1));
  d.set_run_through("b1", "b0", BigInt(p));
  return d;
}

HandleDecomposition build_Dp(int p) {
  HandleDecomposition d = build_Cp(p);
  d.set_name("D" + std::to_string(p));
  d.add_two_handle("u0", BigInt(-2));
  d.set_link("u0", "u1", BigInt(1));
  d.add_two_handle("e", BigInt(-1));
  d.set_link("e", u_id(p - 1), BigInt(p));
  return d;
}

HandleDecomposition build_Dp_tilde(int p) {
  HandleDecomposition d = blow_down(build_Dp(p), "e");
  d.rename(u_id(p - 1), "w");
  d.set_name("Dtilde" + std::to_string(p));
  return d;
}

HandleDecomposition build_Wn(int n) {
  require(n >= 1, "W_n needs n >= 1");
  // The twisting that distinguishes the W_n is invisible to linking data.
  HandleDecomposition d("W" + std::to_string(n));
  d.add_one_handle("h");
  d.add_two_handle("k", BigInt(0));
  d.set_run_through("k", "h", BigInt(1));
  return d;
}

HandleDecomposition build_Wsum(const std::vector<int>& ks) {
  require(!ks.empty(), "W(k_1..k_n) needs n >= 1");
  HandleDecomposition sum("W");
  std::string name = "W(";
  for (std::size_t i = 0; i < ks.size(); ++i) {
    HandleDecomposition w = build_Wn(ks[i]);
    const std::string suffix = std::to_string(i + 1);
    w.rename("h", "h" + suffix);
    w.rename("k", "k" + suffix);
    sum = boundary_sum(sum, w);
    name += (i ? "," : "") + std::to_string(ks[i]);
  }
  sum.set_name(name + ")");
  return sum;
}

MnNn build_Mn_Nn(int n) {
  require(n >= 2, "M_n needs n >= 2");
  MnNn out;
  out.m = HandleDecomposition("M" + std::to_string(n));
  out.m.add_one_handle("h");
  out.m.add_two_handle("k", BigInt(0));
  out.m.add_two_handle("K", BigInt(0));
  out.m.set_run_through("k", "h", BigInt(1));
  out.m.set_link("K", "k", BigInt(n));
  out.n = dot_zero_swap(out.m, "h", "k");
  out.n.set_name("N" + std::to_string(n));
  out.alpha = IntegerVector::Zero(2);
  out.alpha(out.n.two_index("K")) = 1;
  out.alpha(out.n.two_index("h")) = -n;
  out.slid = out.n;
  for (int i = 0; i < n; ++i) out.slid = handle_slide(out.slid, "K", "h", -1);
  return out;
}

AnnotatedDiagram stein_S() {
  AnnotatedDiagram a;
  HandleDecomposition cusp("cusp");
  cusp.add_two_handle("c", BigInt(0));
  a.diagram = boundary_sum(cusp, build_Wn(1));
  a.diagram.set_name("S");
  a.fronts["c"] = trefoil_front();
  a.fronts["k"] = trefoil_front();
  return a;
}

AnnotatedDiagram stein_D_tilde_sum(const std::vector<int>& ps) {
  require(!ps.empty(), "D~(p_1..p_n) needs n >= 1");
  AnnotatedDiagram a;
  a.diagram = HandleDecomposition("Dtilde");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const int p = ps[i];
    const std::string prefix = "d" + std::to_string(i + 1) + "_";
    HandleDecomposition d = with_prefix(build_Dp_tilde(p), prefix);
    a.fronts[prefix + "w"] = legendrian::torus_knot_front(p + 1, p);
    const std::vector<std::string> unknots(d.two_handles().begin() + 1, d.two_handles().end());
    for (const auto& u : unknots) {
      a.fronts[u] = unknot_front();
      const std::string v = prefix + "v" + u.substr(prefix.size() + 1);
      d.add_two_handle(v, BigInt(0));
      d.set_link(v, u, BigInt(1));
      a.fronts[v] = trefoil_front();
    }
    a.diagram = boundary_sum(a.diagram, d);
  }
  return a;
}

AnnotatedDiagram stein_W_sum(const std::vector<int>& ks) {
  AnnotatedDiagram a;
  a.diagram = build_Wsum(ks);
  for (const auto& id : a.diagram.two_handles()) a.fronts[id] = trefoil_front();
  return a;
}

AnnotatedDiagram stein_N_tilde(int n) {
  AnnotatedDiagram a;
  a.diagram = build_Mn_Nn(n).n;
  a.diagram.set_name("Ntilde" + std::to_string(n));
  for (const auto& id : a.diagram.two_handles()) a.fronts[id] = trefoil_front();
  return a;
}

sw::ModelWithClasses synthetic_closed_model(const IntegerMatrix& prescribed, int exceptionals,
                                            int seed_count) {
  const Index m = prescribed.rows();
  require(prescribed.cols() == m, "prescribed Gram matrix is not square");
  require(m == 0 || prescribed == prescribed.transpose(), "prescribed Gram matrix is not symmetric");
  for (Index i = 0; i < m; ++i)
    require(prescribed(i, i) % 2 == 0, "prescribed Gram matrix needs an even diagonal");
  require(exceptionals >= 0, "negative exceptional count");
  require(seed_count >= 0 && seed_count % 2 == 0, "seed count must be even");

  const Index k = (1 + m) % 2 == 0 ? 2 : 3;
  const Index t = (1 + m + k) / 2;
  require(seed_count / 2 <= 64, "seed count too large");
  const Index f = exceptionals;
  const Index rank = 2 * m + f + 2 * k;
  IntegerMatrix q = IntegerMatrix::Zero(rank, rank);
  q.topLeftCorner(m, m) = prescribed;
  for (Index i = 0; i < m; ++i) {
    q(i, m + i) = 1;
    q(m + i, i) = 1;
  }
  for (Index i = 0; i < f; ++i) q(2 * m + i, 2 * m + i) = -1;
  const Index h = 2 * m + f;
  for (Index i = 0; i < k; ++i) {
    q(h + 2 * i, h + 2 * i + 1) = 1;
    q(h + 2 * i + 1, h + 2 * i) = 1;
  }

  IntersectionLattice lattice(q);
  for (Index i = 0; i < m; ++i) {
    lattice.name("x" + std::to_string(i + 1), lattice.basis_vector(i));
    lattice.name("y" + std::to_string(i + 1), lattice.basis_vector(m + i));
  }
  for (Index i = 0; i < f; ++i) lattice.name("f" + std::to_string(i + 1), lattice.basis_vector(2 * m + i));

  sw::ModelWithClasses out;
  out.model = simply_connected_model(std::move(lattice));
  // SW(-K) = (-1)^((e + sigma) / 4) SW(K), and (e + sigma) / 4 == t here.
  const BigInt negated_weight = t % 2 == 0 ? 1 : -1;
  for (int j = 1; j <= seed_count / 2; ++j) {
    IntegerVector kappa = IntegerVector::Zero(rank);
    for (Index i = 0; i < f; ++i) kappa(2 * m + i) = -1;
    kappa(h) = 2;
    kappa(h + 1) = BigInt(2 * (t - j + 1));
    kappa(h + 2) = 2;
    kappa(h + 3) = BigInt(2 * (j - 1));
    out.classes.add(kappa, 1);
    out.classes.add(IntegerVector(-kappa), negated_weight);
  }
  for (const auto& [kappa, w] : out.classes.classes()) {
    if (!sw::is_characteristic(out.model.lattice, kappa) ||
        sw::d_invariant(out.model, kappa).value != 0)
      throw std::logic_error("synthetic seed class is not of simple type");
  }
  return out;
}

std::vector<IntegerVector> X0Model::chain(std::size_t i) const {
  std::vector<IntegerVector> out;
  for (int j = 1; j <= ps.at(i) - 1; ++j) out.push_back(u(i, j));
  return out;
}

IntegerVector X0Model::e(std::size_t i) const {
  return data.model.lattice.named("e" + std::to_string(i + 1));
}

IntegerVector X0Model::u(std::size_t i, int j) const {
  return data.model.lattice.named("u" + std::to_string(i + 1) + "_" + std::to_string(j));
}

IntegerVector X0Model::alpha(std::size_t i) const {
  const int p = ps.at(i);
  IntegerVector a = e(i);
  for (int j = 0; j <= p - 1; ++j) a += BigInt(p - j) * u(i, j);
  return a;
}

X0Model build_X0_model(const std::vector<int>& ps, int seed_count) {
  require(!ps.empty(), "X_0 needs at least one p");
  require(seed_count >= 2, "X_0 needs at least two seed classes");
  Index m = 0;
  for (int p : ps) {
    require(p >= 2, "X_0 needs every p >= 2");
    m += p;
  }
  // Block i is [w_i, u_{p-2}, ..., u_0] with consecutive entries linked once.
  IntegerMatrix g = IntegerMatrix::Zero(m, m);
  std::vector<Index> offsets;
  Index o = 0;
  for (int p : ps) {
    offsets.push_back(o);
    g(o, o) = BigInt(p * p - p - 2);
    for (Index j = 1; j < p; ++j) {
      g(o + j, o + j) = -2;
      g(o + j - 1, o + j) = 1;
      g(o + j, o + j - 1) = 1;
    }
    o += p;
  }

  X0Model out;
  out.ps = ps;
  out.data = synthetic_closed_model(g, static_cast<int>(ps.size()), seed_count);
  IntersectionLattice& lattice = out.data.model.lattice;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const int p = ps[i];
    const std::string tag = std::to_string(i + 1);
    const IntegerVector w = lattice.basis_vector(offsets[i]);
    const IntegerVector e = lattice.named("f" + tag);
    lattice.name("w" + tag, w);
    lattice.name("e" + tag, e);
    for (int j = 0; j <= p - 2; ++j)
      lattice.name("u" + tag + "_" + std::to_string(j), lattice.basis_vector(offsets[i] + (p - 1 - j)));
    lattice.name("u" + tag + "_" + std::to_string(p - 1), IntegerVector(w - BigInt(p) * e));
  }
  return out;
}

bool ScenarioReport::ok() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

void ScenarioReport::expect(std::string claim, std::string origin, bool holds, std::string detail) {
  checks.push_back({std::move(claim), std::move(origin), holds, std::move(detail)});
}

CountLemma verify_count_lemma(const std::vector<int>& ps, std::size_t i, int seed_count) {
  require(i < ps.size(), "chain index out of range");
  const X0Model x0 = build_X0_model(ps, seed_count);
  const int p = ps[i];
  const auto descent = sw::rational_blowdown_descend(x0.data.model, x0.data.classes, x0.chain(i));
  const auto blown = sw::blow_up_basic_classes(descent.result.model, descent.result.classes, p - 1);
  CountLemma out;
  out.n0 = x0.data.classes.size();
  out.descended = descent.result.classes.size();
  out.ni = blown.classes.size();
  out.ok = out.descended == out.n0 && out.ni == (std::size_t{1} << (p - 1)) * out.n0;
  return out;
}

RestrictionLemma verify_restriction_lemma(int p, int seed_count) {
  const X0Model x0 = build_X0_model({p}, seed_count);
  const IntersectionLattice& lattice = x0.data.model.lattice;
  const IntegerVector alpha = x0.alpha(0);
  const IntegerVector e = x0.e(0);
  const IntegerVector top = x0.u(0, p - 1);
  const auto chain = x0.chain(0);

  RestrictionLemma out;
  out.alpha_orthogonal = true;
  for (const auto& u : chain) out.alpha_orthogonal = out.alpha_orthogonal && lattice.pair(alpha, u) == 0;

  const IntegerMatrix complement = sw::orthogonal_complement(lattice, chain);
  std::set<IntegerVector, VectorLess> restrictions;
  out.alpha_pairing = true;
  out.alpha_distinguishes_sign = true;
  for (const auto& [k, w] : x0.data.classes.classes()) {
    out.alpha_pairing = out.alpha_pairing && k.dot(alpha) == BigInt(1 - p) * k.dot(e);
    restrictions.insert(IntegerVector(complement.transpose() * k));
    for (const auto& [k2, w2] : x0.data.classes.classes()) {
      if (k.dot(top) == -k2.dot(top) && k.dot(alpha) == k2.dot(alpha))
        out.alpha_distinguishes_sign = false;
    }
  }
  out.restrictions_distinct = restrictions.size() == x0.data.classes.size();
  return out;
}

sw::ModelWithClasses genus_model(int n) {
  require(n >= 2, "S_n model needs n >= 2");
  IntegerMatrix g(1, 1);
  g(0, 0) = BigInt(n * n + n - 2);
  sw::ModelWithClasses base = synthetic_closed_model(g, 0, 2);
  base.model.lattice.name("a", base.model.lattice.named("x1"));
  return sw::blow_up_basic_classes(base.model, base.classes, n - 1);
}

IntegerVector genus_alpha(const sw::ModelWithClasses& model, int n) {
  const IntersectionLattice& lattice = model.model.lattice;
  IntegerVector alpha = lattice.named("a") - BigInt(n) * lattice.named("E1");
  for (int i = 2; i <= n - 1; ++i) alpha -= lattice.named("E" + std::to_string(i));
  return alpha;
}

GenusObstruction genus_obstruction_Nn(int n, long k) {
  const auto model = genus_model(n);
  const IntegerVector alpha = IntegerVector(BigInt(k) * genus_alpha(model, n));
  GenusObstruction out;
  out.bound = sw::min_genus_bound(model.model, model.classes, alpha);
  const long ak = k < 0 ? -k : k;
  out.expected_pairing = BigInt(ak * (2 * n - 2));
  out.forced_k = k == 0 || out.bound.genus >= n;
  out.ok = out.bound.applicable && out.bound.max_pairing >= out.expected_pairing &&
           out.bound.genus >= BigInt(n * ak - (ak - 1)) && out.forced_k;
  return out;
}

sw::ModelWithClasses knotted_model() {
  IntegerMatrix g(2, 2);
  g << BigInt(0), BigInt(1), BigInt(1), BigInt(-2);
  sw::ModelWithClasses out = synthetic_closed_model(g, 0, 2);
  out.model.lattice.name("T", out.model.lattice.named("x1"));
  out.model.lattice.name("s", out.model.lattice.named("x2"));
  return out;
}

KnottedCorkReport knotted_cork_scenario(const std::vector<TorusKnot>& knots) {
  const auto model = knotted_model();
  const IntegerVector torus = model.model.lattice.named("T");
  const BasicClassSet empty;
  KnottedCorkReport report;
  report.all_nonzero = true;
  report.distinguished_from_x = true;
  for (const auto& knot : knots) {
    KnotSurgeryOutcome o;
    o.knot = knot;
    o.delta = knot.p == 1 || knot.q == 1 ? LaurentPolynomial::monomial(0)
                                         : alexander_polynomial_torus(knot.p, knot.q);
    o.classes = sw::knot_surgery_basic_classes(model.model, model.classes, torus, o.delta);
    const BasicClassSet x_classes = sw::knot_surgery_basic_classes(model.model, empty, torus, o.delta);
    report.all_nonzero = report.all_nonzero && !o.classes.empty();
    report.distinguished_from_x = report.distinguished_from_x && o.classes != x_classes;
    report.outcomes.push_back(std::move(o));
  }
  report.pairwise_distinct = true;
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    for (std::size_t j = i + 1; j < report.outcomes.size(); ++j) {
      if (report.outcomes[i].classes == report.outcomes[j].classes) report.pairwise_distinct = false;
    }
  }
  return report;
}

ScenarioReport lens_scenario(int p_max) {
  ScenarioReport r;
  r.name = "lens";
  for (int p = 2; p <= p_max; ++p) {
    const std::string ps = std::to_string(p);
    const BigInt p2 = BigInt(p * p);
    const auto cp = boundary_first_homology(build_Cp(p));
    const auto bp = boundary_first_homology(build_Bp(p));
    r.expect("|H1(boundary C" + ps + ")| = " + p2.str(), "literature",
             cp.order() == p2 && cp.torsion.size() == 1);
    r.expect("|H1(boundary B" + ps + ")| = " + p2.str(), "computed", bp.order() == p2);
    const auto spliced = rational_blowdown_splice(build_Cp(p), cp_chain_ids(p), p);
    const auto h = homology(spliced);
    r.expect("H1(B" + ps + ") = Z/" + ps, "computed",
             h.h1.free_rank == 0 && h.h1.torsion == std::vector<BigInt>{BigInt(p)});
    r.expect("D" + ps + " contains the C" + ps + " chain", "literature",
             cp_pattern_violation(build_Dp(p), cp_chain_ids(p), p).empty());
  }
  return r;
}

ScenarioReport cork_scenario(int n_max, int k_max) {
  ScenarioReport r;
  r.name = "cork";
  for (int n = 1; n <= n_max; ++n) {
    const auto w = build_Wn(n);
    r.expect("W" + std::to_string(n) + " is homology trivial", "literature", is_homology_trivial(w));
    const auto swapped = dot_zero_swap(w, "h", "k");
    r.expect("twisted W" + std::to_string(n) + " is homology trivial", "computed",
             is_homology_trivial(swapped));
    r.expect("dot-zero swap on W" + std::to_string(n) + " is an involution", "immediate",
             dot_zero_swap(swapped, "k", "h") == w);
    std::vector<int> ks;
    for (int i = 0; i < n; ++i) ks.push_back(1 + (i % k_max));
    const auto sum = build_Wsum(ks);
    r.expect(sum.name() + " is homology trivial", "literature", is_homology_trivial(sum));
  }
  return r;
}

ScenarioReport stein_scenario(int p_max) {
  ScenarioReport r;
  r.name = "stein";
  for (int p = 2; p <= p_max; ++p) {
    const auto front = legendrian::torus_knot_front(p + 1, p);
    const int tb = legendrian::thurston_bennequin(front);
    r.expect("tb(T(" + std::to_string(p + 1) + "," + std::to_string(p) + ")) - 1 = " +
                 std::to_string(p * p - p - 2),
             "literature", tb - 1 == p * p - p - 2);
    r.expect("front of T(" + std::to_string(p + 1) + "," + std::to_string(p) + ") realises max tb",
             "computed", tb == legendrian::max_tb_torus_knot(p + 1, p));
    const int rot = legendrian::rotation_number(front);
    r.expect("tb + rot is odd", "immediate", (tb + rot) % 2 != 0);
  }
  std::vector<AnnotatedDiagram> declared = {stein_S(), stein_W_sum({1, 2, 3})};
  std::vector<int> ps;
  for (int p = 2; p <= p_max; ++p) ps.push_back(p);
  declared.push_back(stein_D_tilde_sum(ps));
  for (int n = 2; n <= 5; ++n) declared.push_back(stein_N_tilde(n));
  for (const auto& a : declared) {
    r.expect(a.diagram.name() + " passes the Stein framing check", "literature",
             legendrian::stein_check(a.diagram, a.fronts).ok);
  }
  return r;
}

ScenarioReport mn_scenario(int n) {
  ScenarioReport r;
  r.name = "mn";
  const auto mn = build_Mn_Nn(n);
  const auto hn = homology(mn.n);
  r.expect("H2(N" + std::to_string(n) + ") = Z", "literature", hn.h2_rank == 1);
  r.expect("H1(N" + std::to_string(n) + ") = 0", "computed", hn.h1.is_trivial());
  r.expect("dot-zero swap twice restores M" + std::to_string(n), "immediate",
           dot_zero_swap(mn.n, "k", "h") == mn.m);
  r.expect("alpha spans H2(N" + std::to_string(n) + ")", "computed",
           hn.h2_rank == 1 && (same_vector(hn.h2_basis.col(0), mn.alpha) ||
                               same_vector(hn.h2_basis.col(0), IntegerVector(-mn.alpha))));
  r.expect("K no longer runs through the dotted circle after " + std::to_string(n) + " slides",
           "literature", mn.slid.run_through("K", "k") == 0);
  const IntegerVector a = mn.alpha;
  r.expect("alpha^2 = 0", "computed", a.dot(mn.n.linking_matrix() * a) == 0);
  return r;
}

ScenarioReport count_scenario(const std::vector<int>& ps, int seed_count) {
  ScenarioReport r;
  r.name = "count";
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const auto c = verify_count_lemma(ps, i, seed_count);
    counts.push_back(c.ni);
    r.expect("N(X" + std::to_string(i + 1) + ") = 2^" + std::to_string(ps[i] - 1) + " N(X0)",
             "literature", c.ok,
             "N0=" + std::to_string(c.n0) + " Ni=" + std::to_string(c.ni));
  }
  const std::set<int> distinct_ps(ps.begin(), ps.end());
  if (distinct_ps.size() == ps.size()) {
    const std::set<std::size_t> distinct_counts(counts.begin(), counts.end());
    r.expect("distinct p give distinct counts", "literature",
             distinct_counts.size() == counts.size());
  }
  return r;
}

}  // namespace handlecalc::catalog
