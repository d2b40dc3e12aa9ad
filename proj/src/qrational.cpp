#include "qglf/qrational.hpp"

#include <algorithm>
#include <stdexcept>

namespace qglf {
namespace {

QPoly exact(const QPoly& a, const QPoly& b) {
  auto r = a.exact_quotient(b);
  if (!r) throw std::logic_error("QRational: inexact polynomial division");
  return *r;
}

bool is_one(const QPoly& p) { return p.is_constant() && !p.is_zero() && p.leading_coefficient() == 1; }

}  // namespace

QRational::QRational(const Rational& c) : num_(c.get_num()), den_(c.get_den()) {}

QRational::QRational(const QPoly& p) {
  *this = make_canonical(p, QPoly(1), true);
}

QRational::QRational(const QPoly& num, const QPoly& den) { *this = make_canonical(num, den, false); }

QRational QRational::make_canonical(QPoly num, QPoly den, bool coprime) {
  if (den.is_zero()) throw std::domain_error("QRational: zero denominator");
  if (num.is_zero()) return QRational(QPoly(0), QPoly(1), Reduced{});
  const int shift = std::min(num.low(), den.low());
  if (shift != 0) {
    num = num.shifted(-shift);
    den = den.shifted(-shift);
  }
  if (!coprime && !den.is_constant()) {
    QPoly g = poly_gcd(num, den);
    if (!is_one(g)) {
      num = exact(num, g);
      den = exact(den, g);
    }
  }
  BigInt cn = num.content();
  BigInt cd = den.content();
  BigInt g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (den.leading_coefficient() < 0) g = -g;
  if (g != 1) {
    num = num.divided_by(g);
    den = den.divided_by(g);
  }
  return QRational(std::move(num), std::move(den), Reduced{});
}

QRational QRational::operator-() const { return QRational(-num_, den_, Reduced{}); }

QRational operator+(const QRational& a, const QRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    QPoly t = a.num_ + b.num_;
    if (t.is_zero()) return {};
    if (is_one(a.den_)) return QRational::make_canonical(std::move(t), a.den_, true);
    return QRational::make_canonical(std::move(t), a.den_, false);
  }
  QPoly g = poly_gcd(a.den_, b.den_);
  if (is_one(g)) {
    return QRational::make_canonical(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, false);
  }
  QPoly da = exact(a.den_, g);
  QPoly db = exact(b.den_, g);
  QPoly t = a.num_ * db + b.num_ * da;
  if (t.is_zero()) return {};
  QPoly g2 = poly_gcd(t, g);
  QPoly rest = g;
  if (!is_one(g2)) {
    t = exact(t, g2);
    rest = exact(g, g2);
  }
  return QRational::make_canonical(std::move(t), da * db * rest, true);
}

QRational operator*(const QRational& a, const QRational& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  if (!d2.is_constant()) {
    QPoly g = poly_gcd(n1, d2);
    if (!is_one(g)) {
      n1 = exact(n1, g);
      d2 = exact(d2, g);
    }
  }
  if (!d1.is_constant()) {
    QPoly g = poly_gcd(n2, d1);
    if (!is_one(g)) {
      n2 = exact(n2, g);
      d1 = exact(d1, g);
    }
  }
  return QRational::make_canonical(n1 * n2, d1 * d2, true);
}

QRational operator/(const QRational& a, const QRational& b) {
  if (b.is_zero()) throw std::domain_error("QRational: division by zero");
  return a * QRational::make_canonical(b.den_, b.num_, true);
}

Rational QRational::evaluate(const Rational& q) const {
  Rational d = den_.evaluate(q);
  if (d == 0) throw std::domain_error("QRational: denominator vanishes at q = " + q.get_str());
  Rational r = num_.evaluate(q) / d;
  r.canonicalize();
  return r;
}

Rational QRational::limit_at_one() const {
  const QPoly q_minus_one = QPoly::q_power(1) - QPoly(1);
  QPoly n = num_, d = den_;
  while (!d.is_zero() && d.evaluate(Rational(1)) == 0) {
    auto dq = d.exact_quotient(q_minus_one);
    auto nq = n.exact_quotient(q_minus_one);
    if (!nq) throw std::domain_error("QRational: pole at q = 1");
    n = *nq;
    d = *dq;
  }
  return n.evaluate(Rational(1)) / d.evaluate(Rational(1));
}

std::string QRational::to_string() const {
  if (is_one(den_)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QRational pow(const QRational& base, long e) {
  if (e < 0) return QRational(1) / pow(base, -e);
  QRational result(1);
  QRational b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return result;
}

}  // namespace qglf
