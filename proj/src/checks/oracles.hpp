#pragma once

// Independent reference computations used to cross-check the library.
// They work on plain machine integers and doubles and share no code with
// the exact algorithms they check.

#include <cstdint>
#include <set>
#include <vector>

namespace handlecalc::oracle {

using Int = std::int64_t;
using Grid = std::vector<std::vector<Int>>;

/// Cofactor expansion; fine for the small sizes used in checks.
Int laplace_determinant(const Grid& m);

/// gcd of all k x k minors (0 when every minor vanishes).
Int gcd_of_minors(const Grid& m, int k);

/// |numerator| of the continued fraction [a1, a2, ...] = a1 - 1/(a2 - 1/...).
Int continued_fraction_numerator(const std::vector<Int>& a);

/// All K + s_1 E_1 + ... + s_n E_n written as evaluation vectors.
std::set<std::vector<Int>> sign_enumeration(const std::vector<std::vector<Int>>& beta, int n);

/// Coefficients (lowest degree first) of (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1)) by long division.
std::vector<Int> torus_alexander_by_division(int p, int q);

/// Signature from floating-point eigenvalues of a symmetric matrix.
int eigen_signature(const Grid& m);

}  // namespace handlecalc::oracle
