#pragma once

// Exact integer linear algebra on dense Eigen matrices.
//
// Every routine is templated on the scalar so the same code runs on BigInt
// (the production scalar) and on built-in integers in tests. Routines that
// only need ring operations (Smith/Hermite forms, Bareiss determinants) work
// for any Euclidean scalar; inverse() needs a field.

#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "handlecalc/scalar.hpp"

namespace handlecalc {

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Quotient rounded to the nearest integer, so |a - q b| <= |b| / 2.
template <typename Scalar>
Scalar nearest_div(const Scalar& a, const Scalar& b) {
  return floor_div(Scalar(2 * a + b), Scalar(2 * b));
}

template <typename Scalar>
struct ExtendedGcd {
  Scalar g, x, y;  // g = x*a + y*b, g >= 0
};

template <typename Scalar>
ExtendedGcd<Scalar> extended_gcd(const Scalar& a, const Scalar& b) {
  Scalar r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Scalar q = r0 / r1;
    Scalar tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) return {Scalar(-r0), Scalar(-s0), Scalar(-t0)};
  return {r0, s0, t0};
}

// Replace rows (p, i) of A and of the tracking matrix T by a unimodular
// combination that leaves A(i, col) == 0 and A(p, col) == gcd.
template <typename Scalar>
void eliminate_rows(Matrix<Scalar>& A, Matrix<Scalar>& T, Index p, Index i, Index col) {
  const Scalar a = A(p, col);
  const Scalar b = A(i, col);
  if (b == 0) return;
  if (a != 0 && b % a == 0) {
    const Scalar q = b / a;
    A.row(i) -= q * A.row(p);
    T.row(i) -= q * T.row(p);
    return;
  }
  const auto eg = extended_gcd(a, b);
  const Scalar ag = a / eg.g;
  const Scalar bg = b / eg.g;
  Vector<Scalar> ap = A.row(p).transpose(), ai = A.row(i).transpose();
  A.row(p) = (eg.x * ap + eg.y * ai).transpose();
  A.row(i) = (ag * ai - bg * ap).transpose();
  Vector<Scalar> tp = T.row(p).transpose(), ti = T.row(i).transpose();
  T.row(p) = (eg.x * tp + eg.y * ti).transpose();
  T.row(i) = (ag * ti - bg * tp).transpose();
}

}  // namespace detail

/// U * M * V == S with U, V unimodular and S diagonal, d1 | d2 | ... , di >= 0.
template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> S, U, V;
  Index rank = 0;

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
    return d;
  }
};

template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Index m = input.rows();
  const Index n = input.cols();
  SmithDecomposition<Scalar> out;
  out.S = input;
  out.U = Matrix<Scalar>::Identity(m, m);
  out.V = Matrix<Scalar>::Identity(n, n);
  Matrix<Scalar>& A = out.S;

  // Pivot on the smallest entry and reduce by remainders; entries stay small
  // compared with gcd-combination elimination.
  auto move_smallest_to = [&](Index t) {
    Index pr = -1, pc = -1;
    Scalar best = 0;
    for (Index i = t; i < m; ++i) {
      for (Index j = t; j < n; ++j) {
        if (A(i, j) == 0) continue;
        const Scalar v = detail::abs_value(A(i, j));
        if (pr < 0 || v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) return false;
    if (pr != t) {
      A.row(pr).swap(A.row(t));
      out.U.row(pr).swap(out.U.row(t));
    }
    if (pc != t) {
      A.col(pc).swap(A.col(t));
      out.V.col(pc).swap(out.V.col(t));
    }
    return true;
  };

  Index t = 0;
  for (; t < std::min(m, n); ++t) {
    if (!move_smallest_to(t)) break;
    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        if (A(i, t) == 0) continue;
        const Scalar q = detail::nearest_div(A(i, t), A(t, t));
        A.row(i) -= q * A.row(t);
        out.U.row(i) -= q * out.U.row(t);
        clean = clean && A(i, t) == 0;
      }
      for (Index j = t + 1; j < n; ++j) {
        if (A(t, j) == 0) continue;
        const Scalar q = detail::nearest_div(A(t, j), A(t, t));
        A.col(j) -= q * A.col(t);
        out.V.col(j) -= q * out.V.col(t);
        clean = clean && A(t, j) == 0;
      }
      if (!clean) {
        move_smallest_to(t);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i) {
        for (Index j = t + 1; j < n; ++j) {
          if (A(i, j) % A(t, t) != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad < 0) break;
      A.row(t) += A.row(bad);
      out.U.row(t) += out.U.row(bad);
    }
    if (A(t, t) < 0) {
      A.row(t) = -A.row(t);
      out.U.row(t) = -out.U.row(t);
    }
  }
  out.rank = t;
  return out;
}

/// W * M == H with W unimodular and H in row Hermite normal form: pivots
/// positive, entries above each pivot reduced into [0, pivot).
template <typename Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> H, W;
  Index rank = 0;
};

template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_normal_form(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Index m = input.rows();
  const Index n = input.cols();
  HermiteDecomposition<Scalar> out;
  out.H = input;
  out.W = Matrix<Scalar>::Identity(m, m);
  Matrix<Scalar>& A = out.H;

  Index r = 0;
  for (Index col = 0; col < n && r < m; ++col) {
    for (Index i = r + 1; i < m; ++i) {
      if (A(i, col) == 0) continue;
      if (A(r, col) == 0) {
        A.row(r).swap(A.row(i));
        out.W.row(r).swap(out.W.row(i));
        continue;
      }
      detail::eliminate_rows(A, out.W, r, i, col);
    }
    if (A(r, col) == 0) continue;
    if (A(r, col) < 0) {
      A.row(r) = -A.row(r);
      out.W.row(r) = -out.W.row(r);
    }
    for (Index k = 0; k < r; ++k) {
      const Scalar q = detail::floor_div(A(k, col), A(r, col));
      if (q == 0) continue;
      A.row(k) -= q * A.row(r);
      out.W.row(k) -= q * out.W.row(r);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

/// Columns form the Hermite-reduced basis of { x in Z^n : M x = 0 }.
/// The basis is canonical: equal kernels give identical matrices.
template <typename Derived>
Matrix<typename Derived::Scalar> integer_kernel_basis(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const Index n = M.cols();
  const Matrix<Scalar> transposed = M.transpose();
  const auto hd = hermite_normal_form(transposed);
  const Matrix<Scalar> kernel_rows = hd.W.bottomRows(n - hd.rank);
  const auto canonical = hermite_normal_form(kernel_rows);
  return canonical.H.topRows(canonical.rank).transpose();
}

/// Fraction-free (Bareiss) determinant.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Index n = M.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> A = M;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      Index swap_row = -1;
      for (Index i = k + 1; i < n; ++i) {
        if (A(i, k) != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return Scalar(0);
      A.row(k).swap(A.row(swap_row));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
      }
    }
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

/// Gauss-Jordan inverse over a field scalar. Throws on a singular input.
template <typename Derived>
Matrix<typename Derived::Scalar> inverse(const Eigen::MatrixBase<Derived>& M) {
  using Scalar = typename Derived::Scalar;
  const Index n = M.rows();
  if (n != M.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<Scalar> A = M;
  Matrix<Scalar> inv = Matrix<Scalar>::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index p = k;
    while (p < n && A(p, k) == 0) ++p;
    if (p == n) throw std::domain_error("matrix is singular");
    if (p != k) {
      A.row(p).swap(A.row(k));
      inv.row(p).swap(inv.row(k));
    }
    const Scalar pivot = A(k, k);
    A.row(k) /= pivot;
    inv.row(k) /= pivot;
    for (Index i = 0; i < n; ++i) {
      if (i == k || A(i, k) == 0) continue;
      const Scalar f = A(i, k);
      A.row(i) -= f * A.row(k);
      inv.row(i) -= f * inv.row(k);
    }
  }
  return inv;
}

/// Sylvester inertia of a symmetric form.
struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
  Index signature() const { return positive - negative; }
};

/// Congruence diagonalisation counting pivot signs. Integer input is
/// promoted to rationals.
template <typename Derived>
Inertia inertia(const Eigen::MatrixBase<Derived>& M) {
  using Input = typename Derived::Scalar;
  using Scalar = std::conditional_t<std::numeric_limits<Input>::is_integer, Rational, Input>;
  const Index n = M.rows();
  Matrix<Scalar> A(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = Scalar(M(i, j));
  Inertia out;
  for (Index k = 0; k < n; ++k) {
    if (A(k, k) == 0) {
      Index j = k + 1;
      while (j < n && A(j, j) == 0) ++j;
      if (j < n) {
        A.row(k).swap(A.row(j));
        A.col(k).swap(A.col(j));
      } else {
        j = k + 1;
        while (j < n && A(k, j) == 0) ++j;
        if (j == n) {
          ++out.zero;
          continue;
        }
        // A(j,j) == 0 here, so e_k + e_j has square 2 A(k,j) != 0.
        A.row(k) += A.row(j);
        A.col(k) += A.col(j);
      }
    }
    const Scalar pivot = A(k, k);
    if (pivot > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    for (Index i = k + 1; i < n; ++i) {
      if (A(i, k) == 0) continue;
      const Scalar f = A(i, k) / pivot;
      A.row(i) -= f * A.row(k);
      A.col(i) -= f * A.col(k);
    }
  }
  return out;
}

inline RationalMatrix to_rational(const IntegerMatrix& M) {
  RationalMatrix out(M.rows(), M.cols());
  for (Index i = 0; i < M.rows(); ++i)
    for (Index j = 0; j < M.cols(); ++j) out(i, j) = Rational(M(i, j));
  return out;
}

inline IntegerMatrix block_diagonal(const IntegerMatrix& a, const IntegerMatrix& b) {
  IntegerMatrix out = IntegerMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

inline BigInt gcd_of(const IntegerVector& v) {
  BigInt g = 0;
  for (Index i = 0; i < v.size(); ++i) g = detail::extended_gcd(g, v(i)).g;
  return g;
}

}  // namespace handlecalc
