#include "mfcalc/polynomial.hpp"

#include <algorithm>

namespace mfcalc {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  coefficients_.reserve(coefficients.size());
  for (long c : coefficients) coefficients_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

Integer IntPolynomial::coefficient(std::size_t degree) const {
  return degree < coefficients_.size() ? coefficients_[degree] : Integer(0);
}

Integer IntPolynomial::alternating_sum() const {
  Integer sum = 0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i % 2 == 0) {
      sum += coefficients_[i];
    } else {
      sum -= coefficients_[i];
    }
  }
  return sum;
}

bool IntPolynomial::is_palindromic() const {
  return std::equal(coefficients_.begin(), coefficients_.end(),
                    coefficients_.rbegin());
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coefficients_.size() > coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  trim();
  return *this;
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Integer& c = coefficients_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    Integer mag = abs(c);
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

void IntPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

}  // namespace mfcalc
