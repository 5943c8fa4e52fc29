#include "handlecalc/laurent.hpp"

#include <numeric>
#include <sstream>
#include <vector>

#include "handlecalc/error.hpp"

namespace handlecalc {

LaurentPolynomial::LaurentPolynomial(std::map<long, BigInt> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPolynomial LaurentPolynomial::monomial(long exponent, const BigInt& coefficient) {
  LaurentPolynomial out;
  out.add_term(exponent, coefficient);
  return out;
}

void LaurentPolynomial::add_term(long exponent, const BigInt& coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

long LaurentPolynomial::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

BigInt LaurentPolynomial::at_one() const {
  BigInt sum = 0;
  for (const auto& [e, c] : terms_) sum += c;
  return sum;
}

bool LaurentPolynomial::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

LaurentPolynomial LaurentPolynomial::shifted(long by) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + by, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& other) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& other) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : other.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
  LaurentPolynomial out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) out.add_term(e1 + e2, c1 * c2);
  }
  return out;
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const long e = it->first;
    BigInt c = it->second;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (e == 0) {
      out << c;
    } else {
      if (c != 1) out << c << '*';
      out << 't';
      if (e != 1) out << '^' << e;
    }
    first = false;
  }
  return out.str();
}

LaurentPolynomial alexander_polynomial_torus(int p, int q) {
  if (p < 2 || q < 2 || std::gcd(p, q) != 1)
    throw Error("torus knot parameters must be coprime and at least 2");
  // Semigroup form: (1 - t) * sum_{s in <p,q>, s < c} t^s + t^c.
  const long c = static_cast<long>(p - 1) * (q - 1);
  std::vector<bool> in_semigroup(static_cast<std::size_t>(c) + 1, false);
  for (long a = 0; a * p <= c; ++a) {
    for (long b = 0; a * p + b * q <= c; ++b) in_semigroup[static_cast<std::size_t>(a * p + b * q)] = true;
  }
  LaurentPolynomial delta = LaurentPolynomial::monomial(c);
  for (long s = 0; s < c; ++s) {
    if (!in_semigroup[static_cast<std::size_t>(s)]) continue;
    delta = delta + LaurentPolynomial::monomial(s) - LaurentPolynomial::monomial(s + 1);
  }
  return delta.shifted(-c / 2);
}

}  // namespace handlecalc
