#include "checks/oracles.hpp"

#include <Eigen/Eigenvalues>
#include <numeric>
#include <stdexcept>

namespace handlecalc::oracle {

Int laplace_determinant(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Int det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Int> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    const Int term = m[0][c] * laplace_determinant(minor);
    det += c % 2 == 0 ? term : -term;
  }
  return det;
}

namespace {

void subsets(int n, int k, int start, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(current.size()) == k) {
    out.push_back(current);
    return;
  }
  for (int i = start; i < n; ++i) {
    current.push_back(i);
    subsets(n, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

Int gcd_of_minors(const Grid& m, int k) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  std::vector<std::vector<int>> row_sets, col_sets;
  std::vector<int> scratch;
  subsets(rows, k, 0, scratch, row_sets);
  subsets(cols, k, 0, scratch, col_sets);
  Int g = 0;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      Grid sub;
      for (int r : rs) {
        std::vector<Int> row;
        for (int c : cs) row.push_back(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
        sub.push_back(row);
      }
      g = std::gcd(g, laplace_determinant(sub));
    }
  }
  return g < 0 ? -g : g;
}

Int continued_fraction_numerator(const std::vector<Int>& a) {
  // Evaluate from the tail: value = num/den with num = a_i * num' - den', den = num'.
  Int num = 1, den = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const Int next = *it * num - den;
    den = num;
    num = next;
  }
  return num < 0 ? -num : num;
}

std::set<std::vector<Int>> sign_enumeration(const std::vector<std::vector<Int>>& beta, int n) {
  std::set<std::vector<Int>> out;
  for (const auto& k : beta) {
    std::vector<std::vector<Int>> partial{k};
    for (int i = 0; i < n; ++i) {
      std::vector<std::vector<Int>> next;
      for (const auto& v : partial) {
        for (Int s : {Int(1), Int(-1)}) {
          auto w = v;
          w.push_back(s);
          next.push_back(w);
        }
      }
      partial = next;
    }
    out.insert(partial.begin(), partial.end());
  }
  return out;
}

namespace {

std::vector<Int> multiply(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Int> t_power_minus_one(int n) {
  std::vector<Int> out(static_cast<std::size_t>(n) + 1, 0);
  out[0] = -1;
  out[static_cast<std::size_t>(n)] = 1;
  return out;
}

}  // namespace

std::vector<Int> torus_alexander_by_division(int p, int q) {
  std::vector<Int> num = multiply(t_power_minus_one(p * q), t_power_minus_one(1));
  const std::vector<Int> den = multiply(t_power_minus_one(p), t_power_minus_one(q));
  // Monic divisor, so schoolbook division stays integral.
  std::vector<Int> quotient(num.size() - den.size() + 1, 0);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const Int c = num[i + den.size() - 1] / den.back();
    quotient[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  for (Int r : num) {
    if (r != 0) throw std::logic_error("torus Alexander division left a remainder");
  }
  return quotient;
}

int eigen_signature(const Grid& m) {
  const auto n = static_cast<Eigen::Index>(m.size());
  if (n == 0) return 0;
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = static_cast<double>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  int sig = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v = solver.eigenvalues()(i);
    if (v > 1e-9) ++sig;
    if (v < -1e-9) --sig;
  }
  return sig;
}

}  // namespace handlecalc::oracle
