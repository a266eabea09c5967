#include "p4spec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace p4spec {

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) {
    coeffs_.emplace_back(c);
  }
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::x() { return IntPolynomial{0, 1}; }

IntPolynomial IntPolynomial::linear_factor(const BigInt& root) {
  return IntPolynomial(std::vector<BigInt>{BigInt(-root), BigInt(1)});
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

BigInt IntPolynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
    return 0;
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), 0);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size(), 0);
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    return {};
  }
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPolynomial IntPolynomial::pow(unsigned exponent) const {
  IntPolynomial result = constant(1);
  IntPolynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1U) {
      result *= base;
    }
    exponent >>= 1U;
    if (exponent > 0) {
      base *= base;
    }
  }
  return result;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) {
      continue;
    }
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) {
        os << "-";
      }
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) {
      os << mag.get_str();
    }
    if (i >= 1) {
      os << "x";
    }
    if (i >= 2) {
      os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    out.push_back(c.get_str());
  }
  if (out.empty()) {
    out.emplace_back("0");
  }
  return out;
}

std::pair<IntPolynomial, BigInt> synthetic_division(const IntPolynomial& p, const BigInt& root) {
  const auto& c = p.coefficients();
  if (c.empty()) {
    return {IntPolynomial{}, BigInt(0)};
  }
  std::vector<BigInt> quotient(c.size() - 1);
  BigInt carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    quotient[i] = carry;
    carry = c[i] + carry * root;
  }
  return {IntPolynomial(std::move(quotient)), carry};
}

std::pair<IntPolynomial, IntPolynomial> divide_monic(const IntPolynomial& numerator, const IntPolynomial& divisor) {
  if (!divisor.is_monic()) {
    throw std::invalid_argument("divide_monic: divisor must be monic");
  }
  std::vector<BigInt> rem = numerator.coefficients();
  const auto& d = divisor.coefficients();
  const int dd = divisor.degree();
  if (numerator.degree() < dd) {
    return {IntPolynomial{}, numerator};
  }
  std::vector<BigInt> quot(static_cast<std::size_t>(numerator.degree() - dd + 1), 0);
  for (int i = numerator.degree(); i >= dd; --i) {
    const BigInt factor = rem[static_cast<std::size_t>(i)];
    if (factor == 0) {
      continue;
    }
    quot[static_cast<std::size_t>(i - dd)] = factor;
    for (int k = 0; k <= dd; ++k) {
      rem[static_cast<std::size_t>(i - dd + k)] -= factor * d[static_cast<std::size_t>(k)];
    }
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& q, const IntPolynomial& p) {
  auto [quot, rem] = divide_monic(q, p);
  if (!rem.is_zero()) {
    return std::nullopt;
  }
  return quot;
}

bool divides(const IntPolynomial& p, const IntPolynomial& q) { return exact_quotient(q, p).has_value(); }

}  // namespace p4spec
