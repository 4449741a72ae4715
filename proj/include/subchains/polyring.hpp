#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subchains/bigcount.hpp"

namespace subchains {

/// Dense univariate polynomial over the integers.
///
/// Coefficients are stored in ascending order of degree. The stored vector
/// never ends in a zero; the zero polynomial is the empty vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigCount> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigCount& c);
  /// c * X^k
  static IntPolynomial monomial(const BigCount& c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of X^i; zero beyond the degree.
  BigCount coeff(std::size_t i) const;
  BigCount leading() const;
  std::span<const BigCount> coefficients() const { return coeffs_; }

  /// Exact Horner evaluation.
  BigCount eval(const BigCount& x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigCount& c);
  /// Multiply by X^k.
  IntPolynomial shifted(std::size_t k) const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b);

  /// Human form in descending powers, e.g. "2p^3 + 8p^2 + 8p + 8".
  std::string to_text(std::string_view var = "p") const;
  /// Ascending coefficients rendered as decimal strings; "0" alone for zero.
  std::vector<std::string> to_decimal_coefficients() const;
  static IntPolynomial from_decimal_coefficients(std::span<const std::string> ascending);

 private:
  void canonicalize();

  std::vector<BigCount> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
BigCount poly_eval(const IntPolynomial& a, const BigCount& x);
IntPolynomial poly_scale(const IntPolynomial& a, const BigCount& c);

inline IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
inline IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  return poly_mul(a, b);
}

}  // namespace subchains
