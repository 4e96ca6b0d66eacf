#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "mfcalc/integer.hpp"

namespace mfcalc {

/// Polynomial in t with integer coefficients over non-negative degrees.
/// Trailing zero coefficients are always trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// Single term c * t^degree.
  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);

  /// Coefficient at `degree`, zero outside the stored range.
  Integer coefficient(std::size_t degree) const;
  const std::vector<Integer>& coefficients() const { return coefficients_; }

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree of the leading term; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }

  /// Value at t = -1.
  Integer alternating_sum() const;
  /// True when coefficient i equals coefficient degree()-i for all i.
  bool is_palindromic() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Renders like "1+5t^3+5t^4+t^7"; the zero polynomial prints "0".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coefficients_;
};

}  // namespace mfcalc
