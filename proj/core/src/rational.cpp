#include "subcrit/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace subcrit {

namespace {

BigInt parse_digits(std::string_view s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  BigInt v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    v = v * 10 + (ch - '0');
  }
  return v;
}

BigInt pow10(std::size_t k) {
  BigInt v = 1;
  for (std::size_t i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q = Rational(parse_digits(s.substr(0, slash), text), den);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty())
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    BigInt whole = ip.empty() ? BigInt(0) : parse_digits(ip, text);
    BigInt frac = fp.empty() ? BigInt(0) : parse_digits(fp, text);
    BigInt scale = pow10(fp.size());
    q = Rational(whole * scale + frac, scale);
  } else {
    q = Rational(parse_digits(s, text));
  }
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.str(); }

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational pow(const Rational& base, std::uint32_t exponent) {
  Rational out = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) out *= base;
  return out;
}

AlphaPolynomial AlphaPolynomial::monomial(const Rational& coefficient, std::uint32_t power) {
  AlphaPolynomial p;
  p.add(coefficient, power);
  return p;
}

void AlphaPolynomial::add(const Rational& coefficient, std::uint32_t power) {
  if (coefficient == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(power, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) coeffs_.erase(it);
  }
}

AlphaPolynomial& AlphaPolynomial::operator+=(const AlphaPolynomial& other) {
  for (const auto& [power, c] : other.coeffs_) add(c, power);
  return *this;
}

AlphaPolynomial& AlphaPolynomial::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
  } else {
    for (auto& [power, c] : coeffs_) c *= scalar;
  }
  return *this;
}

Rational AlphaPolynomial::coefficient(std::uint32_t power) const {
  auto it = coeffs_.find(power);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational AlphaPolynomial::evaluate(const Rational& alpha) const {
  Rational sum = 0;
  for (const auto& [power, c] : coeffs_) sum += c * subcrit::pow(alpha, power);
  return sum;
}

double AlphaPolynomial::evaluate(double alpha) const {
  double sum = 0.0;
  for (const auto& [power, c] : coeffs_)
    sum += to_double(c) * std::pow(alpha, static_cast<double>(power));
  return sum;
}

std::string AlphaPolynomial::to_string(std::string_view symbol) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [power, c] : coeffs_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1 && power > 0;
    if (!unit) out += mag.str();
    if (power > 0) {
      if (!unit) out += "*";
      out += symbol;
      if (power > 1) out += "^" + std::to_string(power);
    }
  }
  return out;
}

std::vector<BigInt> falling_ratio_coefficients(std::uint32_t t) {
  std::vector<BigInt> c{1};
  for (std::uint32_t i = 1; i < t; ++i) {
    c.push_back(0);
    for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] -= c[j - 1] * i;
  }
  if (t == 0) return {1};
  return c;
}

}  // namespace subcrit
