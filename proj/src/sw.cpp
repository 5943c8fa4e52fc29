#include "handlecalc/sw.hpp"

#include <stdexcept>

#include "handlecalc/error.hpp"

namespace handlecalc::sw {

namespace {

void require_b2plus(const ManifoldModel& m, const char* operation) {
  if (m.b2plus <= 1)
    throw ModelError(std::string(operation) + " needs b2+ > 1, model has b2+ = " +
                     std::to_string(m.b2plus));
}

void require_rank(const IntersectionLattice& lattice, const IntegerVector& v, const char* what) {
  if (v.size() != lattice.rank())
    throw ModelError(std::string(what) + " has rank " + std::to_string(v.size()) +
                     ", lattice has rank " + std::to_string(lattice.rank()));
}

void require_simple_type(const ManifoldModel& m, const BasicClassSet& beta,
                         SimpleTypePredicate predicate) {
  if (!is_simple_type(m, beta, predicate)) throw ModelError("model is not of simple type");
}

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

bool is_characteristic(const IntersectionLattice& lattice, const IntegerVector& k) {
  require_rank(lattice, k, "class");
  for (Index i = 0; i < k.size(); ++i) {
    const BigInt diff = k(i) - lattice.pairing()(i, i);
    if (diff % 2 != 0) return false;
  }
  return true;
}

DInvariant d_invariant(const ManifoldModel& m, const IntegerVector& k) {
  const Rational square = m.lattice.class_square(k);
  if (boost::multiprecision::denominator(square) != 1)
    throw ModelError("K^2 = " + square.str() + " is not an integer");
  const BigInt numerator =
      BigInt(boost::multiprecision::numerator(square)) - 2 * m.euler - 3 * m.signature;
  if (numerator % 4 != 0)
    throw ModelError("K^2 - 2e - 3sigma = " + numerator.str() + " is not divisible by 4");
  DInvariant d;
  d.value = numerator / 4;
  d.even = d.value % 2 == 0;
  return d;
}

bool is_simple_type(const ManifoldModel& m, const BasicClassSet& beta,
                    SimpleTypePredicate predicate) {
  for (const auto& [k, w] : beta.classes()) {
    const DInvariant d = d_invariant(m, k);
    if (predicate == SimpleTypePredicate::Standard) {
      if (d.value != 0) return false;
    } else if (m.lattice.class_square(k) != Rational(d.value)) {
      return false;
    }
  }
  return true;
}

ModelWithClasses blow_up_basic_classes(const ManifoldModel& m, const BasicClassSet& beta, int n) {
  if (n < 0) throw ModelError("blow-up count must be non-negative");
  if (beta.empty()) throw ModelError("blow-up formula needs a non-empty basic class set");
  require_b2plus(m, "blow-up formula");
  if (n == 0) return {m, beta};
  if (n > 24) throw ModelError("blow-up count too large");

  const Index r = m.lattice.rank();
  IntegerMatrix q = block_diagonal(m.lattice.pairing(), IntegerMatrix(-IntegerMatrix::Identity(n, n)));
  IntersectionLattice lattice(std::move(q));
  for (const auto& [label, v] : m.lattice.names()) {
    IntegerVector x = IntegerVector::Zero(r + n);
    x.head(r) = v;
    lattice.name(label, x);
  }
  int first = 1;
  while (m.lattice.has_name("E" + std::to_string(first))) ++first;
  for (int i = 0; i < n; ++i) lattice.name("E" + std::to_string(first + i), lattice.basis_vector(r + i));

  ModelWithClasses out;
  out.model.lattice = std::move(lattice);
  out.model.euler = m.euler + n;
  out.model.signature = m.signature - n;
  out.model.b2plus = m.b2plus;
  for (const auto& [k, w] : beta.classes()) {
    IntegerVector extended(r + n);
    extended.head(r) = k;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
      for (int i = 0; i < n; ++i) extended(r + i) = (mask >> i) & 1ul ? BigInt(-1) : BigInt(1);
      out.classes.add(extended, w);
    }
  }
  return out;
}

AdjunctionReport adjunction_check(const ManifoldModel& m, const BasicClassSet& beta,
                                  const IntegerVector& alpha, long g,
                                  SimpleTypePredicate predicate) {
  if (g <= 0) throw ModelError("adjunction inequality needs genus g > 0");
  require_b2plus(m, "adjunction inequality");
  require_rank(m.lattice, alpha, "surface class");
  require_simple_type(m, beta, predicate);
  AdjunctionReport report;
  const BigInt square = m.lattice.square(alpha);
  const BigInt bound = BigInt(2 * g - 2);
  for (const auto& [k, w] : beta.classes()) {
    if (square + abs_value(k.dot(alpha)) > bound) {
      report.ok = false;
      report.violators.push_back(k);
    }
  }
  return report;
}

GenusBound min_genus_bound(const ManifoldModel& m, const BasicClassSet& beta,
                           const IntegerVector& alpha, SimpleTypePredicate predicate) {
  if (beta.empty()) throw ModelError("genus bound needs a non-empty basic class set");
  require_b2plus(m, "genus bound");
  require_rank(m.lattice, alpha, "surface class");
  require_simple_type(m, beta, predicate);
  GenusBound out;
  for (const auto& [k, w] : beta.classes()) {
    const BigInt pairing = abs_value(k.dot(alpha));
    if (pairing > out.max_pairing) out.max_pairing = pairing;
  }
  const BigInt square = m.lattice.square(alpha);
  if (square < 0) return out;
  out.applicable = true;
  // 2g - 2 >= square + max_pairing, rounded up.
  const BigInt numerator = square + out.max_pairing + 2;
  out.genus = (numerator + 1) / 2;
  if (out.genus < 1) out.genus = 1;
  return out;
}

bool rbd_lift_eligible(const IntegerVector& k, const std::vector<IntegerVector>& chain) {
  if (chain.empty()) return false;
  const auto p = static_cast<long>(chain.size()) + 1;
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    if (chain[j].size() != k.size()) throw ModelError("chain vector has wrong rank");
    if (k.dot(chain[j]) != 0) return false;
  }
  if (chain.back().size() != k.size()) throw ModelError("chain vector has wrong rank");
  return abs_value(k.dot(chain.back())) == p;
}

IntegerMatrix orthogonal_complement(const IntersectionLattice& lattice,
                                    const std::vector<IntegerVector>& vectors) {
  IntegerMatrix constraints(static_cast<Index>(vectors.size()), lattice.rank());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    require_rank(lattice, vectors[j], "vector");
    constraints.row(static_cast<Index>(j)) = lattice.dual(vectors[j]).transpose();
  }
  return integer_kernel_basis(constraints);
}

DescentResult rational_blowdown_descend(const ManifoldModel& m, const BasicClassSet& beta,
                                        const std::vector<IntegerVector>& chain,
                                        std::optional<IntegerMatrix> complement_basis) {
  const IntersectionLattice& lattice = m.lattice;
  const auto p = static_cast<long>(chain.size()) + 1;
  if (p < 2) throw ModelError("chain is empty");
  const Index r = lattice.rank();

  // The chain must realise the C_p plumbing: -2, ..., -2, -(p+2) in a line.
  for (std::size_t i = 0; i < chain.size(); ++i) {
    require_rank(lattice, chain[i], "chain vector");
    for (std::size_t j = i; j < chain.size(); ++j) {
      BigInt expected = 0;
      if (i == j) expected = i + 1 == chain.size() ? BigInt(-(p + 2)) : BigInt(-2);
      if (j == i + 1) expected = 1;
      if (lattice.pair(chain[i], chain[j]) != expected)
        throw ModelError("chain does not have the C_p pairing pattern");
    }
  }

  IntegerMatrix c = complement_basis ? *complement_basis : orthogonal_complement(lattice, chain);
  if (c.rows() != r || c.cols() != r - (p - 1))
    throw ModelError("complement basis must have " + std::to_string(r - (p - 1)) + " vectors");
  IntegerMatrix all(r, r);
  for (std::size_t i = 0; i < chain.size(); ++i) all.col(static_cast<Index>(i)) = chain[i];
  all.rightCols(c.cols()) = c;
  const IntegerMatrix gram = all.transpose() * lattice.pairing() * all;
  if (!gram.block(0, p - 1, p - 1, c.cols()).isZero())
    throw ModelError("complement basis is not orthogonal to the chain");
  if (determinant(gram) == 0) throw ModelError("chain and complement do not span a finite-index sublattice");

  DescentResult out;
  out.complement_basis = c;
  IntersectionLattice reduced(IntegerMatrix(c.transpose() * lattice.pairing() * c));

  // Carry named vectors that live in the complement.
  if (c.cols() > 0) {
    const RationalMatrix gc_inverse = inverse(to_rational(reduced.pairing()));
    for (const auto& [label, x] : lattice.names()) {
      const IntegerVector rhs = c.transpose() * lattice.pairing() * x;
      IntegerVector y(c.cols());
      bool integral = true;
      for (Index i = 0; i < c.cols() && integral; ++i) {
        Rational yi = 0;
        for (Index j = 0; j < c.cols(); ++j) yi += gc_inverse(i, j) * Rational(rhs(j));
        integral = boost::multiprecision::denominator(yi) == 1;
        if (integral) y(i) = boost::multiprecision::numerator(yi);
      }
      if (integral && c * y == x) reduced.name(label, y);
    }
  }

  ManifoldModel& model = out.result.model;
  model.lattice = std::move(reduced);
  model.euler = m.euler - (p - 1);
  model.signature = m.signature + (p - 1);
  model.b2plus = static_cast<long>(model.lattice.inertia().positive);

  for (const auto& [k, w] : beta.classes()) {
    if (!rbd_lift_eligible(k, chain)) throw ModelError("basic class is not a lift for the chain");
    const IntegerVector restriction = c.transpose() * k;
    if (out.result.classes.contains(restriction)) {
      if (out.result.classes.weight(restriction) != w)
        throw ModelError("two lifts with different SW values restrict to the same class");
      continue;
    }
    if (d_invariant(model, restriction).value != d_invariant(m, k).value)
      throw std::logic_error("d-invariant changed under rational blowdown");
    out.result.classes.add(restriction, w);
    out.lifts.emplace_back(restriction, k);
  }
  return out;
}

BasicClassSet knot_surgery_basic_classes(const ManifoldModel& m, const BasicClassSet& beta,
                                         const IntegerVector& torus,
                                         const LaurentPolynomial& delta) {
  require_rank(m.lattice, torus, "torus class");
  if (m.lattice.square(torus) != 0) throw ModelError("torus class must have square 0");
  if (gcd_of(torus) != 1) throw ModelError("torus class must be primitive");
  if (!beta.is_negation_closed()) throw ModelError("basic class set is not closed under negation");
  const IntegerVector shift = m.lattice.dual(torus);
  BasicClassSet out;
  for (const auto& [k, w] : beta.classes()) {
    for (const auto& [j, a] : delta.terms()) {
      out.add(IntegerVector(k + BigInt(2 * j) * shift), w * a);
    }
  }
  return out;
}

}  // namespace handlecalc::sw
