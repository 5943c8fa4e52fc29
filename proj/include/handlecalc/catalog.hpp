#pragma once

#include <string>
#include <utility>
#include <vector>

#include "handlecalc/handle.hpp"
#include "handlecalc/legendrian.hpp"
#include "handlecalc/sw.hpp"

namespace handlecalc::catalog {

// Handlebody models. Chain handles are named u<j>; D_p adds u0 and e.

HandleDecomposition build_Cp(int p);
HandleDecomposition build_Bp(int p);
HandleDecomposition build_Dp(int p);
/// Blow-down of D_p along e; the (p+1,p) torus knot handle is named w.
HandleDecomposition build_Dp_tilde(int p);
HandleDecomposition build_Wn(int n);
HandleDecomposition build_Wsum(const std::vector<int>& ks);
/// Ids of the C_p chain inside build_Cp / build_Dp, in pattern order.
std::vector<std::string> cp_chain_ids(int p);

struct MnNn {
  HandleDecomposition m;
  HandleDecomposition n;
  IntegerVector alpha;         // generator of H_2(N_n) in N_n's 2-handle coordinates
  HandleDecomposition slid;    // N_n after sliding K over h n times
};

MnNn build_Mn_Nn(int n);

/// Handlebody with a front on every 2-handle.
struct AnnotatedDiagram {
  HandleDecomposition diagram;
  legendrian::LegendrianAnnotation fronts;
};

/// Cusp neighbourhood plus W_1.
AnnotatedDiagram stein_S();
/// D~(p_1..p_n) with a trefoil handle attached to each unknot.
AnnotatedDiagram stein_D_tilde_sum(const std::vector<int>& ps);
AnnotatedDiagram stein_W_sum(const std::vector<int>& ks);
AnnotatedDiagram stein_N_tilde(int n);

// Closed lattice models.

/// Unimodular model realising a prescribed even Gram matrix G:
/// [x | y | f | hyperbolic pairs] with Gram [[G, I], [I, 0]] + (-I_f) + H^k
/// and `seed_count` basic classes of standard simple type. Names x1.., f1...
sw::ModelWithClasses synthetic_closed_model(const IntegerMatrix& prescribed, int exceptionals,
                                            int seed_count);

struct X0Model {
  sw::ModelWithClasses data;
  std::vector<int> ps;
  std::vector<IntegerVector> chain(std::size_t i) const;  // u_1 .. u_{p-1}
  IntegerVector e(std::size_t i) const;
  IntegerVector u(std::size_t i, int j) const;
  /// e + u_{p-1} + 2 u_{p-2} + ... + p u_0
  IntegerVector alpha(std::size_t i) const;
};

X0Model build_X0_model(const std::vector<int>& ps, int seed_count);

// Verifications.

struct Expectation {
  std::string claim;
  std::string origin;  // literature, immediate or computed
  bool holds = false;
  std::string detail;
};

struct ScenarioReport {
  std::string name;
  std::vector<Expectation> checks;
  bool ok() const;
  void expect(std::string claim, std::string origin, bool holds, std::string detail = "");
};

struct CountLemma {
  std::size_t n0 = 0;
  std::size_t descended = 0;
  std::size_t ni = 0;
  bool ok = false;
};

CountLemma verify_count_lemma(const std::vector<int>& ps, std::size_t i, int seed_count);

struct RestrictionLemma {
  bool alpha_orthogonal = false;
  bool alpha_pairing = false;   // <K, alpha> == (1 - p) <K, e>
  bool restrictions_distinct = false;
  bool alpha_distinguishes_sign = false;
  bool ok() const {
    return alpha_orthogonal && alpha_pairing && restrictions_distinct && alpha_distinguishes_sign;
  }
};

RestrictionLemma verify_restriction_lemma(int p, int seed_count);

struct GenusObstruction {
  sw::GenusBound bound;
  BigInt expected_pairing;  // |k| (2n - 2)
  bool forced_k = false;    // genus < n is impossible unless k == 0
  bool ok = false;
};

/// S_n # (n-1) CP2-bar model with alpha = a - n E1 - E2 - ... - E_{n-1}.
sw::ModelWithClasses genus_model(int n);
IntegerVector genus_alpha(const sw::ModelWithClasses& model, int n);
GenusObstruction genus_obstruction_Nn(int n, long k);

struct TorusKnot {
  int p = 1;
  int q = 1;  // p or q == 1 denotes the unknot
};

struct KnotSurgeryOutcome {
  TorusKnot knot;
  LaurentPolynomial delta;
  BasicClassSet classes;
};

struct KnottedCorkReport {
  std::vector<KnotSurgeryOutcome> outcomes;
  bool pairwise_distinct = false;
  bool all_nonzero = false;
  bool distinguished_from_x = false;
  bool ok() const { return pairwise_distinct && all_nonzero && distinguished_from_x; }
};

/// S~ lattice [[0,1],[1,-2]] on (T, s) with two seed classes.
sw::ModelWithClasses knotted_model();
KnottedCorkReport knotted_cork_scenario(const std::vector<TorusKnot>& knots);

// End-to-end scenario reports.
ScenarioReport lens_scenario(int p_max);
ScenarioReport cork_scenario(int n_max, int k_max);
ScenarioReport stein_scenario(int p_max);
ScenarioReport mn_scenario(int n);
ScenarioReport count_scenario(const std::vector<int>& ps, int seed_count);

}  // namespace handlecalc::catalog
