#include "altperm/qpolynomial.hpp"

#include <algorithm>

#include "altperm/errors.hpp"

namespace altperm {

std::string int128_to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  unsigned __int128 magnitude =
      negative ? -static_cast<unsigned __int128>(value)
               : static_cast<unsigned __int128>(value);
  std::string digits;
  while (magnitude > 0) {
    digits += static_cast<char>('0' + static_cast<int>(magnitude % 10));
    magnitude /= 10;
  }
  if (negative) digits += '-';
  std::reverse(digits.begin(), digits.end());
  return digits;
}

QPolynomial::QPolynomial(std::vector<Int128> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

QPolynomial QPolynomial::constant(Int128 c) {
  return QPolynomial(std::vector<Int128>{c});
}

QPolynomial QPolynomial::monomial(int degree, Int128 c) {
  std::vector<Int128> coeffs(static_cast<std::size_t>(degree) + 1, 0);
  coeffs.back() = c;
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::q_int(int m) {
  return QPolynomial(std::vector<Int128>(static_cast<std::size_t>(m), 1));
}

QPolynomial QPolynomial::q_factorial(int n) {
  QPolynomial result = constant(1);
  for (int k = 1; k <= n; ++k) result = result * q_int(k);
  return result;
}

Int128 QPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

QPolynomial QPolynomial::operator+(const QPolynomial& other) const {
  std::vector<Int128> coeffs(
      std::max(coefficients_.size(), other.coefficients_.size()), 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    coeffs[i] += coefficients_[i];
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coeffs[i] += other.coefficients_[i];
  }
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::operator-(const QPolynomial& other) const {
  return *this + other.scaled(-1);
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (is_zero() || other.is_zero()) return QPolynomial();
  std::vector<Int128> coeffs(
      coefficients_.size() + other.coefficients_.size() - 1, 0);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      coeffs[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::scaled(Int128 factor) const {
  std::vector<Int128> coeffs = coefficients_;
  for (Int128& c : coeffs) c *= factor;
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::halved() const {
  std::vector<Int128> coeffs = coefficients_;
  for (Int128& c : coeffs) {
    if (c % 2 != 0) {
      throw NonIntegralHalving("odd coefficient " + int128_to_string(c) +
                               " cannot be halved exactly");
    }
    c /= 2;
  }
  return QPolynomial(std::move(coeffs));
}

Int128 QPolynomial::evaluate_at(long long q) const {
  Int128 value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * q + *it;
  }
  return value;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Int128 c = coefficients_[k];
    if (c == 0) continue;
    if (out.empty()) {
      out += (c < 0) ? "-" : "";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    const Int128 magnitude = c < 0 ? -c : c;
    if (magnitude != 1 || k == 0) out += int128_to_string(magnitude);
    if (k >= 1) {
      out += 'q';
      if (k >= 2) {
        out += '^';
        out += std::to_string(k);
      }
    }
  }
  return out;
}

}  // namespace altperm
