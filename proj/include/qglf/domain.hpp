#pragma once

#include <concepts>
#include <stdexcept>
#include <string>

#include "qglf/qrational.hpp"

namespace qglf {

/// Exact coefficient domain in which q is either the formal variable or a
/// fixed integer. Every formula in the library is written once against this
/// contract and instantiated for both domains.
template <class D>
concept ExactDomain = requires(const D& d, const typename D::value_type& v, long k, const BigInt& z) {
  typename D::value_type;
  { d.from_int(k) } -> std::same_as<typename D::value_type>;
  { d.from_bigint(z) } -> std::same_as<typename D::value_type>;
  { d.q_power(k) } -> std::same_as<typename D::value_type>;
  { D::is_zero(v) } -> std::same_as<bool>;
  { D::render(v) } -> std::same_as<std::string>;
};

/// q is the formal variable; values live in Q(q).
struct SymbolicQ {
  using value_type = QRational;

  QRational from_int(long k) const { return QRational(k); }
  QRational from_bigint(const BigInt& z) const { return QRational(z); }
  QRational q_power(long e) const { return QRational::q_power(static_cast<int>(e)); }
  static bool is_zero(const QRational& v) { return v.is_zero(); }
  static std::string render(const QRational& v) { return v.to_string(); }
  std::string label() const { return "sym"; }
};

/// q is a fixed integer greater than 1; values live in Q.
struct NumericQ {
  using value_type = Rational;

  explicit NumericQ(long q_value) : q(q_value) {
    if (q_value < 2) throw std::invalid_argument("NumericQ: q must be an integer greater than 1");
  }

  Rational from_int(long k) const { return Rational(k); }
  Rational from_bigint(const BigInt& z) const { return Rational(z); }
  Rational q_power(long e) const {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(p);
    Rational r(BigInt(1), p);
    return r;
  }
  static bool is_zero(const Rational& v) { return sgn(v) == 0; }
  static std::string render(const Rational& v) { return v.get_str(); }
  std::string label() const { return q.get_str(); }

  /// Value of a symbolic quantity at this q.
  Rational evaluate(const QRational& v) const { return v.evaluate(Rational(q)); }

  BigInt q;
};

static_assert(ExactDomain<SymbolicQ>);
static_assert(ExactDomain<NumericQ>);

inline bool is_zero(const QRational& v) { return v.is_zero(); }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }
inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }

}  // namespace qglf
