#pragma once

#include <map>
#include <string>

#include "handlecalc/error.hpp"
#include "handlecalc/scalar.hpp"

namespace handlecalc {

/// Laurent polynomial in t with integer coefficients; zero terms are not stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<long, BigInt> terms);
  static LaurentPolynomial monomial(long exponent, const BigInt& coefficient = BigInt(1));

  const std::map<long, BigInt>& terms() const { return terms_; }
  BigInt coefficient(long exponent) const;
  bool is_zero() const { return terms_.empty(); }
  long min_exponent() const;
  long max_exponent() const;

  BigInt at_one() const;
  /// p(t) == p(1/t).
  bool is_symmetric() const;
  LaurentPolynomial shifted(long by) const;

  LaurentPolynomial operator+(const LaurentPolynomial& other) const;
  LaurentPolynomial operator-(const LaurentPolynomial& other) const;
  LaurentPolynomial operator*(const LaurentPolynomial& other) const;
  bool operator==(const LaurentPolynomial& other) const { return terms_ == other.terms_; }
  bool operator!=(const LaurentPolynomial& other) const { return terms_ != other.terms_; }

  /// Highest degree first, e.g. "t - 1 + t^-1".
  std::string to_string() const;

 private:
  void add_term(long exponent, const BigInt& coefficient);
  std::map<long, BigInt> terms_;
};

/// Symmetrised Alexander polynomial of the (p, q) torus knot.
LaurentPolynomial alexander_polynomial_torus(int p, int q);

}  // namespace handlecalc
