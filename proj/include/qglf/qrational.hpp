#pragma once

#include <string>

#include "qglf/qpoly.hpp"

namespace qglf {

/// Element of Q(q) held in canonical form.
///
/// numerator and denominator are polynomials in Z[q] with no common factor
/// over Q, their integer contents are coprime, and the denominator has a
/// positive leading coefficient. Zero is 0/1. Canonical form makes
/// operator== structural.
class QRational {
 public:
  QRational() : num_(0), den_(1) {}
  QRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const BigInt& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const Rational& c);  // NOLINT(google-explicit-constructor)
  QRational(const QPoly& p);  // NOLINT(google-explicit-constructor)
  QRational(const QPoly& num, const QPoly& den);

  static QRational q() { return QPoly::q_power(1); }
  static QRational q_power(int e) { return QPoly::q_power(e); }

  const QPoly& numerator() const { return num_; }
  const QPoly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// Denominator is a positive integer constant.
  bool is_polynomial() const { return den_.is_constant(); }
  /// Denominator is c*q^j: the value is a Laurent polynomial with rational coefficients.
  bool is_laurent() const { return den_.is_monomial(); }

  /// Substitutes a rational value for q. Throws std::domain_error if the
  /// denominator vanishes there.
  Rational evaluate(const Rational& q) const;
  /// Value at q = 1 after cancelling every factor (q - 1) from numerator and
  /// denominator. Throws std::domain_error if a pole at q = 1 remains.
  Rational limit_at_one() const;

  QRational operator-() const;
  friend QRational operator+(const QRational& a, const QRational& b);
  friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
  friend QRational operator*(const QRational& a, const QRational& b);
  friend QRational operator/(const QRational& a, const QRational& b);
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational& operator/=(const QRational& o) { return *this = *this / o; }
  friend bool operator==(const QRational& a, const QRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  struct Reduced {};
  QRational(QPoly num, QPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  static QRational make_canonical(QPoly num, QPoly den, bool coprime);

  QPoly num_;
  QPoly den_;
};

QRational pow(const QRational& base, long e);

}  // namespace qglf
