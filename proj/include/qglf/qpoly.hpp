#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qglf {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Laurent polynomial in the formal variable q with integer coefficients.
///
/// Stored densely from the lowest nonzero exponent upward; the first and
/// last stored coefficients are always nonzero, and the zero polynomial has
/// no coefficients at all. Two QPoly values are equal iff they are equal
/// coefficient-wise.
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c);  // NOLINT(google-explicit-constructor)
  QPoly(const BigInt& c);  // NOLINT(google-explicit-constructor)

  /// c * q^e
  static QPoly monomial(const BigInt& c, int e);
  static QPoly q_power(int e) { return monomial(1, e); }
  /// coeffs[i] is the coefficient of q^(low + i).
  static QPoly from_coefficients(std::vector<BigInt> coeffs, int low = 0);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  /// True when every exponent is nonnegative.
  bool is_polynomial() const { return coeffs_.empty() || low_ >= 0; }

  /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
  int low() const { return low_; }
  /// Highest exponent with a nonzero coefficient (-1 for the zero polynomial).
  int degree() const { return coeffs_.empty() ? -1 : low_ + static_cast<int>(coeffs_.size()) - 1; }
  BigInt coefficient(int e) const;
  const BigInt& leading_coefficient() const { return coeffs_.back(); }
  const std::vector<BigInt>& dense() const { return coeffs_; }

  /// Multiplies by q^e.
  QPoly shifted(int e) const;
  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  QPoly primitive_part() const;
  /// Divides every coefficient by c; c must divide all of them.
  QPoly divided_by(const BigInt& c) const;
  /// Exact quotient over Z[q, 1/q], or nullopt when d does not divide *this.
  std::optional<QPoly> exact_quotient(const QPoly& d) const;

  Rational evaluate(const Rational& q) const;
  BigInt evaluate(const BigInt& q) const;  // requires is_polynomial()

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) { return a.low_ == b.low_ && a.coeffs_ == b.coeffs_; }

  /// Canonical text form: descending exponents, e.g. "2*q^3 - q + 1".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Greatest common divisor in Z[q] of two polynomials (nonnegative support),
/// returned primitive with positive leading coefficient. gcd(0, 0) = 0.
QPoly poly_gcd(const QPoly& a, const QPoly& b);

/// Gaussian binomial coefficient [n k]_q; zero when k < 0 or k > n.
QPoly qbinomial(int n, int k);
/// [n]!_q / prod [p_i]!_q. Throws std::invalid_argument unless sum(parts) == n.
QPoly qmultinomial(int n, const std::vector<int>& parts);
/// [m]!_q = prod_{i=1}^m (1 + q + ... + q^{i-1}).
QPoly qfactorial(int m);

}  // namespace qglf
