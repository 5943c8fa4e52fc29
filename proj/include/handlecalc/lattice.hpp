#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "handlecalc/error.hpp"
#include "handlecalc/linalg.hpp"

namespace handlecalc {

/// Free abelian group with a symmetric integer pairing.
///
/// Homology elements are coordinate vectors x with x.y = x^T Q y. A
/// cohomology class K is stored by its evaluations k_i = <K, b_i> on the
/// basis, so <K, x> = k . x and K^2 = k^T Q^{-1} k.
class IntersectionLattice {
 public:
  IntersectionLattice() : pairing_(0, 0) {}
  explicit IntersectionLattice(IntegerMatrix pairing);

  Index rank() const { return pairing_.rows(); }
  const IntegerMatrix& pairing() const { return pairing_; }

  BigInt pair(const IntegerVector& x, const IntegerVector& y) const;
  BigInt square(const IntegerVector& x) const { return pair(x, x); }

  /// Evaluation vector of the Poincare dual of x.
  IntegerVector dual(const IntegerVector& x) const;

  bool is_nondegenerate() const;
  /// Square of a class given by evaluations; throws ModelError when degenerate.
  Rational class_square(const IntegerVector& k) const;

  IntegerVector basis_vector(Index i) const;
  Inertia inertia() const;

  void name(const std::string& label, const IntegerVector& x);
  bool has_name(const std::string& label) const { return named_.count(label) > 0; }
  const IntegerVector& named(const std::string& label) const;
  const std::map<std::string, IntegerVector>& names() const { return named_; }

 private:
  IntegerMatrix pairing_;
  std::map<std::string, IntegerVector> named_;
  std::shared_ptr<const RationalMatrix> inverse_;  // null when degenerate
};

/// Closed-manifold stand-in: lattice plus Euler characteristic, signature and b2+.
struct ManifoldModel {
  IntersectionLattice lattice;
  BigInt euler = 2;
  BigInt signature = 0;
  long b2plus = 0;
};

/// Model of a simply connected manifold whose lattice is all of H^2:
/// e = 2 + rank, signature and b2+ read off the pairing.
ManifoldModel simply_connected_model(IntersectionLattice lattice);

/// Finite set of classes with integer weights. Adding a class that is already
/// present accumulates its weight; a zero total removes it.
class BasicClassSet {
 public:
  using Map = std::map<IntegerVector, BigInt, VectorLess>;

  void add(const IntegerVector& k, const BigInt& weight = BigInt(1));
  bool contains(const IntegerVector& k) const { return classes_.count(k) > 0; }
  BigInt weight(const IntegerVector& k) const;
  std::size_t size() const { return classes_.size(); }
  bool empty() const { return classes_.empty(); }
  const Map& classes() const { return classes_; }

  bool is_negation_closed() const;
  bool operator==(const BasicClassSet& other) const { return classes_ == other.classes_; }
  bool operator!=(const BasicClassSet& other) const { return !(*this == other); }

 private:
  Map classes_;
};

}  // namespace handlecalc
