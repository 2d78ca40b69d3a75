#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcrit {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Accepts integers, fractions "a/b" and decimals "-1.25" (exactly).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
Rational pow(const Rational& base, std::uint32_t exponent);

/// Polynomial in a single symbol alpha with exact rational coefficients.
class AlphaPolynomial {
 public:
  AlphaPolynomial() = default;
  static AlphaPolynomial monomial(const Rational& coefficient, std::uint32_t power);

  void add(const Rational& coefficient, std::uint32_t power);
  AlphaPolynomial& operator+=(const AlphaPolynomial& other);
  AlphaPolynomial& operator*=(const Rational& scalar);
  friend AlphaPolynomial operator+(AlphaPolynomial a, const AlphaPolynomial& b) {
    return a += b;
  }
  friend AlphaPolynomial operator*(AlphaPolynomial a, const Rational& s) {
    return a *= s;
  }
  bool operator==(const AlphaPolynomial&) const = default;

  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(std::uint32_t power) const;
  /// Nonzero coefficients keyed by alpha-power.
  const std::map<std::uint32_t, Rational>& terms() const { return coeffs_; }

  Rational evaluate(const Rational& alpha) const;
  double evaluate(double alpha) const;

  /// e.g. "2/3*a^2 - 2*a^3"; "0" for the zero polynomial.
  std::string to_string(std::string_view symbol = "a") const;

 private:
  std::map<std::uint32_t, Rational> coeffs_;
};

/// Coefficients c_0..c_{t-1} with (n)_t / n^t = sum_j c_j n^{-j}, i.e. the
/// coefficients of prod_{i<t} (1 - i x).
std::vector<BigInt> falling_ratio_coefficients(std::uint32_t t);

}  // namespace subcrit
