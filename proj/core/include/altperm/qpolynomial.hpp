#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace altperm {

/// Exact signed 128-bit integer; wide enough for every coefficient that can
/// arise from groups of desk-scale order.
using Int128 = __int128;

std::string int128_to_string(Int128 value);

/// A polynomial in q with exact integer coefficients, stored ascending by
/// degree with trailing zeros trimmed. The zero polynomial has no
/// coefficients. Equality is structural.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Int128> coefficients);

  static QPolynomial constant(Int128 c);
  static QPolynomial monomial(int degree, Int128 c = 1);

  /// [m]_q = 1 + q + ... + q^{m-1} (m >= 0; [0]_q = 0).
  static QPolynomial q_int(int m);
  /// [n]!_q = prod_{k=1}^{n} [k]_q.
  static QPolynomial q_factorial(int n);

  bool is_zero() const { return coefficients_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Int128 coefficient(int k) const;
  const std::vector<Int128>& coefficients() const { return coefficients_; }

  QPolynomial operator+(const QPolynomial& other) const;
  QPolynomial operator-(const QPolynomial& other) const;
  QPolynomial operator*(const QPolynomial& other) const;
  QPolynomial scaled(Int128 factor) const;

  /// Divides every coefficient by 2; throws NonIntegralHalving if any
  /// coefficient is odd.
  QPolynomial halved() const;

  Int128 evaluate_at(long long q) const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  /// "1 + 2q + q^2": ascending, zero terms omitted, unit coefficients
  /// implicit on positive powers. The zero polynomial prints "0".
  std::string str() const;

 private:
  std::vector<Int128> coefficients_;
};

}  // namespace altperm
