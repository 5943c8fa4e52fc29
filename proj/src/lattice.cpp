#include "handlecalc/lattice.hpp"

#include "handlecalc/error.hpp"

namespace handlecalc {

IntersectionLattice::IntersectionLattice(IntegerMatrix pairing) : pairing_(std::move(pairing)) {
  if (pairing_.rows() != pairing_.cols()) throw ModelError("pairing matrix is not square");
  if (pairing_.size() > 0 && pairing_ != pairing_.transpose())
    throw ModelError("pairing matrix is not symmetric");
  if (rank() > 0 && determinant(pairing_) != 0)
    inverse_ = std::make_shared<const RationalMatrix>(inverse(to_rational(pairing_)));
}

BigInt IntersectionLattice::pair(const IntegerVector& x, const IntegerVector& y) const {
  if (x.size() != rank() || y.size() != rank()) throw ModelError("vector has wrong rank");
  if (rank() == 0) return 0;
  return x.dot(pairing_ * y);
}

IntegerVector IntersectionLattice::dual(const IntegerVector& x) const {
  if (x.size() != rank()) throw ModelError("vector has wrong rank");
  if (rank() == 0) return IntegerVector(0);
  return pairing_ * x;
}

bool IntersectionLattice::is_nondegenerate() const { return rank() == 0 || inverse_ != nullptr; }

Rational IntersectionLattice::class_square(const IntegerVector& k) const {
  if (k.size() != rank()) throw ModelError("class has wrong rank");
  if (rank() == 0) return Rational(0);
  if (!inverse_) throw ModelError("pairing is degenerate");
  RationalMatrix kr(k.size(), 1);
  for (Index i = 0; i < k.size(); ++i) kr(i, 0) = Rational(k(i));
  return (kr.transpose() * (*inverse_) * kr)(0, 0);
}

IntegerVector IntersectionLattice::basis_vector(Index i) const {
  IntegerVector v = IntegerVector::Zero(rank());
  v(i) = 1;
  return v;
}

Inertia IntersectionLattice::inertia() const { return handlecalc::inertia(pairing_); }

void IntersectionLattice::name(const std::string& label, const IntegerVector& x) {
  if (x.size() != rank()) throw ModelError("named vector '" + label + "' has wrong rank");
  named_[label] = x;
}

const IntegerVector& IntersectionLattice::named(const std::string& label) const {
  auto it = named_.find(label);
  if (it == named_.end()) throw ModelError("no lattice vector named '" + label + "'");
  return it->second;
}

ManifoldModel simply_connected_model(IntersectionLattice lattice) {
  ManifoldModel m;
  const Inertia in = lattice.inertia();
  m.euler = BigInt(2 + lattice.rank());
  m.signature = BigInt(in.signature());
  m.b2plus = static_cast<long>(in.positive);
  m.lattice = std::move(lattice);
  return m;
}

void BasicClassSet::add(const IntegerVector& k, const BigInt& weight) {
  if (weight == 0) return;
  auto [it, inserted] = classes_.emplace(k, weight);
  if (!inserted) {
    it->second += weight;
    if (it->second == 0) classes_.erase(it);
  }
}

BigInt BasicClassSet::weight(const IntegerVector& k) const {
  auto it = classes_.find(k);
  return it == classes_.end() ? BigInt(0) : it->second;
}

bool BasicClassSet::is_negation_closed() const {
  for (const auto& [k, w] : classes_) {
    if (!contains(IntegerVector(-k))) return false;
  }
  return true;
}

}  // namespace handlecalc
