#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "handlecalc/laurent.hpp"
#include "handlecalc/lattice.hpp"

namespace handlecalc::sw {

/// <K, x> == x.x mod 2 for every basis vector x.
bool is_characteristic(const IntersectionLattice& lattice, const IntegerVector& k);

struct DInvariant {
  BigInt value;
  bool even = true;  // false flags a model inconsistent with d being even
};

/// (K^2 - 2e - 3 sigma) / 4. Throws ModelError when K^2 is fractional or the
/// numerator is not divisible by 4.
DInvariant d_invariant(const ManifoldModel& m, const IntegerVector& k);

enum class SimpleTypePredicate {
  Standard,  // d(K) == 0
  Literal,   // K^2 == d(K)
};

bool is_simple_type(const ManifoldModel& m, const BasicClassSet& beta,
                    SimpleTypePredicate predicate = SimpleTypePredicate::Standard);

struct ModelWithClasses {
  ManifoldModel model;
  BasicClassSet classes;
};

/// Blow up n times. New exceptional classes are named E<i>, continuing any
/// existing numbering.
ModelWithClasses blow_up_basic_classes(const ManifoldModel& m, const BasicClassSet& beta, int n);

struct AdjunctionReport {
  bool ok = true;
  std::vector<IntegerVector> violators;
};

/// alpha^2 + |<K, alpha>| <= 2g - 2 for every K in beta.
AdjunctionReport adjunction_check(const ManifoldModel& m, const BasicClassSet& beta,
                                  const IntegerVector& alpha, long g,
                                  SimpleTypePredicate predicate = SimpleTypePredicate::Standard);

struct GenusBound {
  BigInt genus = 0;
  BigInt max_pairing = 0;
  bool applicable = false;  // false when alpha^2 < 0
};

/// Least genus g >= 1 compatible with the adjunction inequality for alpha.
GenusBound min_genus_bound(const ManifoldModel& m, const BasicClassSet& beta,
                           const IntegerVector& alpha,
                           SimpleTypePredicate predicate = SimpleTypePredicate::Standard);

/// <K,u_1> = ... = <K,u_{p-2}> = 0 and <K,u_{p-1}> = +-p, with p = chain size + 1.
bool rbd_lift_eligible(const IntegerVector& k, const std::vector<IntegerVector>& chain);

struct DescentResult {
  ModelWithClasses result;
  IntegerMatrix complement_basis;  // columns
  std::vector<std::pair<IntegerVector, IntegerVector>> lifts;  // (descendant, lift)
};

/// Orthogonal complement of the span of `vectors`, as a canonical basis.
IntegerMatrix orthogonal_complement(const IntersectionLattice& lattice,
                                    const std::vector<IntegerVector>& vectors);

/// Rational blowdown along the chain u_1..u_{p-1}. Classes are restricted
/// to the complement basis (computed when not given).
DescentResult rational_blowdown_descend(const ManifoldModel& m, const BasicClassSet& beta,
                                        const std::vector<IntegerVector>& chain,
                                        std::optional<IntegerMatrix> complement_basis = std::nullopt);

/// beta' = { K + 2jT : a_j != 0 }, weights multiplied by a_j.
BasicClassSet knot_surgery_basic_classes(const ManifoldModel& m, const BasicClassSet& beta,
                                         const IntegerVector& torus,
                                         const LaurentPolynomial& delta);

}  // namespace handlecalc::sw
