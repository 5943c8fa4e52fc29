#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

namespace handlecalc {

// Expression templates are off so that Eigen sees a plain value type.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntegerMatrix = Matrix<BigInt>;
using IntegerVector = Vector<BigInt>;
using RationalMatrix = Matrix<Rational>;

inline std::optional<std::int64_t> to_int64(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value < lo || value > hi) return std::nullopt;
  return value.convert_to<std::int64_t>();
}

inline std::string to_string(const BigInt& value) { return value.str(); }

/// Lexicographic order on integer vectors (shorter vectors first).
struct VectorLess {
  bool operator()(const IntegerVector& a, const IntegerVector& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (Index i = 0; i < a.size(); ++i) {
      if (a(i) != b(i)) return a(i) < b(i);
    }
    return false;
  }
};

inline bool same_vector(const IntegerVector& a, const IntegerVector& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

inline bool same_matrix(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

}  // namespace handlecalc
