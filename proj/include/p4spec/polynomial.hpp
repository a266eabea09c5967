#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace p4spec {

using BigInt = mpz_class;

/// Univariate polynomial with arbitrary-precision integer coefficients, stored
/// in ascending degree order. Trailing zero coefficients are stripped, so the
/// zero polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial x();
  /// The monic linear factor x - root.
  static IntPolynomial linear_factor(const BigInt& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_constant() const { return coeffs_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the degree.
  BigInt coeff(int i) const;
  const BigInt& leading() const { return coeffs_.back(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  BigInt evaluate(const BigInt& x) const;
  double evaluate(double x) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial& lhs, const IntPolynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  IntPolynomial pow(unsigned exponent) const;

  /// Human-readable form, e.g. "x^4 - 6x^3 + 10x^2 - 4x".
  std::string to_string() const;
  /// Ascending coefficients as decimal strings.
  std::vector<std::string> coefficient_strings() const;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Divides p by (x - root) once: returns (quotient, remainder) with
/// p = (x - root) * quotient + remainder.
std::pair<IntPolynomial, BigInt> synthetic_division(const IntPolynomial& p, const BigInt& root);

/// Long division by a monic divisor. Throws std::invalid_argument when the
/// divisor is not monic.
std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& numerator, const IntPolynomial& divisor);

/// Quotient q / p when p divides q exactly over the integers.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& q, const IntPolynomial& p);

/// True iff q = p * r for an integer polynomial r. Requires p monic.
bool divides(const IntPolynomial& p, const IntPolynomial& q);

}  // namespace p4spec
