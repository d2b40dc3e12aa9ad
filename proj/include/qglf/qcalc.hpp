#pragma once

// q-calculus primitives shared by every formula: q-integers, q-factorials,
// Gaussian binomials, q-Pochhammer symbols, the falling basis
// B_t(x) = (x; q^-1)_t / (q; q)_t and the two change-of-basis expansions
// between B_t and x^k, the q-difference operator, and terminating basic
// hypergeometric sums.

#include <optional>
#include <stdexcept>
#include <vector>

#include "qglf/domain.hpp"
#include "qglf/xpoly.hpp"

namespace qglf {

inline long binom2(long n) { return n * (n - 1) / 2; }

inline BigInt big_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline int sign_power(long e) { return (e % 2 == 0) ? 1 : -1; }

/// [m]_q = 1 + q + ... + q^{m-1}
template <ExactDomain D>
typename D::value_type q_integer(const D& d, int m) {
  if constexpr (std::is_same_v<D, SymbolicQ>) {
    std::vector<BigInt> ones(static_cast<std::size_t>(std::max(m, 0)), BigInt(1));
    return QRational(QPoly::from_coefficients(std::move(ones)));
  } else {
    BigInt top = big_pow(d.q, static_cast<unsigned long>(m)) - 1;
    BigInt bottom = d.q - 1;
    mpz_divexact(top.get_mpz_t(), top.get_mpz_t(), bottom.get_mpz_t());
    return Rational(top);
  }
}

/// [m]!_q
template <ExactDomain D>
typename D::value_type q_factorial(const D& d, int m) {
  if (m < 0) throw std::invalid_argument("q_factorial: negative argument");
  if constexpr (std::is_same_v<D, SymbolicQ>) {
    return QRational(qfactorial(m));
  } else {
    BigInt acc = 1;
    for (int i = 1; i <= m; ++i) acc *= q_integer(d, i).get_num();
    return Rational(acc);
  }
}

/// Gaussian binomial [n k]_q, zero outside 0 <= k <= n.
template <ExactDomain D>
typename D::value_type q_binomial(const D& d, int n, int k) {
  if (n < 0 || k < 0 || k > n) return d.from_int(0);
  if constexpr (std::is_same_v<D, SymbolicQ>) {
    return QRational(qbinomial(n, k));
  } else {
    k = std::min(k, n - k);
    BigInt acc = 1;
    for (int i = 1; i <= k; ++i) {
      acc *= big_pow(d.q, static_cast<unsigned long>(n - k + i)) - 1;
      BigInt den = big_pow(d.q, static_cast<unsigned long>(i)) - 1;
      mpz_divexact(acc.get_mpz_t(), acc.get_mpz_t(), den.get_mpz_t());
    }
    return Rational(acc);
  }
}

/// (a; q^base_exp)_m = prod_{i=0}^{m-1} (1 - a q^{base_exp * i})
template <ExactDomain D>
typename D::value_type q_pochhammer(const D& d, const typename D::value_type& a, int base_exp, int m) {
  using V = typename D::value_type;
  V acc = d.from_int(1);
  for (int i = 0; i < m; ++i) acc *= d.from_int(1) - a * d.q_power(static_cast<long>(base_exp) * i);
  return acc;
}

/// (q; q)_m
template <ExactDomain D>
typename D::value_type qq_pochhammer(const D& d, int m) {
  return q_pochhammer(d, d.q_power(1), 1, m);
}

/// (x; q^base_exp)_m as a polynomial in the marker x.
template <ExactDomain D>
XPoly<typename D::value_type> marker_pochhammer(const D& d, int base_exp, int m) {
  using V = typename D::value_type;
  XPoly<V> acc = XPoly<V>::constant(d.from_int(1));
  for (int i = 0; i < m; ++i) {
    acc = acc * XPoly<V>(std::vector<V>{d.from_int(1), -d.q_power(static_cast<long>(base_exp) * i)});
  }
  return acc;
}

/// B_t(x) = (x; q^-1)_t / (q; q)_t, built from the product.
template <ExactDomain D>
XPoly<typename D::value_type> falling_basis(const D& d, int t) {
  return marker_pochhammer(d, -1, t) * (d.from_int(1) / qq_pochhammer(d, t));
}

/// [x^r] B_t(x) from the q-binomial theorem:
/// (-1)^r q^{binom(t-r,2)} [t r]_q / ((q;q)_t q^{binom(t,2)}).
template <ExactDomain D>
typename D::value_type falling_to_monomial(const D& d, int t, int r) {
  if (r < 0 || r > t) return d.from_int(0);
  typename D::value_type v = q_binomial(d, t, r) * d.q_power(binom2(t - r) - binom2(t)) / qq_pochhammer(d, t);
  return sign_power(r) < 0 ? -v : v;
}

/// Coefficient of B_m(x) in x^k: (-1)^m q^{binom(m,2)} (q^k; q^-1)_m.
template <ExactDomain D>
typename D::value_type monomial_to_falling(const D& d, int k, int m) {
  if (m < 0 || m > k) return d.from_int(0);
  typename D::value_type v = d.q_power(binom2(m)) * q_pochhammer(d, d.q_power(k), -1, m);
  return sign_power(m) < 0 ? -v : v;
}

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i)
template <ExactDomain D>
typename D::value_type gl_order(const D& d, int n) {
  auto acc = d.from_int(1);
  for (int i = 0; i < n; ++i) acc *= d.q_power(n) - d.q_power(i);
  return acc;
}

/// One application of (Delta_q f)(x) = (f(qx) - f(x)) / ((q - 1) x).
template <ExactDomain D>
XPoly<typename D::value_type> qdifference(const D& d, const XPoly<typename D::value_type>& f) {
  using V = typename D::value_type;
  std::vector<V> out;
  for (int k = 1; k <= f.degree(); ++k) out.push_back(f.coefficient(k) * q_integer(d, k));
  return XPoly<V>(std::move(out));
}

/// Delta_q applied N times.
template <ExactDomain D>
XPoly<typename D::value_type> qdifference_iter(const D& d, XPoly<typename D::value_type> f, int N) {
  for (int i = 0; i < N; ++i) f = qdifference(d, f);
  return f;
}

/// When v equals q^{-t} for some integer t >= 0, returns t.
template <ExactDomain D>
std::optional<int> as_inverse_q_power(const D& d, const typename D::value_type& v) {
  if constexpr (std::is_same_v<D, SymbolicQ>) {
    const auto& num = v.numerator();
    const auto& den = v.denominator();
    if (!(num.is_constant() && !num.is_zero() && num.leading_coefficient() == 1)) return std::nullopt;
    if (!den.is_monomial() || den.leading_coefficient() != 1) return std::nullopt;
    return den.low();
  } else {
    if (v.get_num() != 1) return std::nullopt;
    BigInt den = v.get_den();
    int t = 0;
    while (den != 1) {
      if (den % d.q != 0) return std::nullopt;
      den /= d.q;
      ++t;
    }
    return t;
  }
}

/// Terminating basic hypergeometric series
///   r_phi_s(a_1..a_r; b_1..b_s; z)
///     = sum_d prod (a_i; q)_d / ((q; q)_d prod (b_j; q)_d) * ((-1)^d q^{binom(d,2)})^e z^d
/// with e = variant_exponent (defaults to 1 + s - r). Some a_i must equal
/// q^{-t}, t >= 0; the sum stops at the smallest such t. Throws
/// std::invalid_argument for a non-terminating parameter list and
/// std::domain_error if a denominator factor vanishes inside the range.
template <ExactDomain D>
typename D::value_type qhyper_terminating(const D& d, const std::vector<typename D::value_type>& numer,
                                          const std::vector<typename D::value_type>& denom,
                                          const typename D::value_type& z,
                                          std::optional<int> variant_exponent = std::nullopt) {
  using V = typename D::value_type;
  std::optional<int> stop;
  for (const auto& a : numer) {
    if (auto t = as_inverse_q_power(d, a)) stop = stop ? std::min(*stop, *t) : *t;
  }
  if (!stop) throw std::invalid_argument("qhyper_terminating: no numerator parameter of the form q^-t");
  const int e = variant_exponent.value_or(1 + static_cast<int>(denom.size()) - static_cast<int>(numer.size()));
  V sum = d.from_int(0);
  V term_ratio_free = d.from_int(1);  // prod (a;q)_d / ((q;q)_d prod (b;q)_d)
  V z_power = d.from_int(1);
  for (int k = 0; k <= *stop; ++k) {
    if (k > 0) {
      V num = d.from_int(1);
      for (const auto& a : numer) num *= d.from_int(1) - a * d.q_power(k - 1);
      V den = d.from_int(1) - d.q_power(k);
      for (const auto& b : denom) den *= d.from_int(1) - b * d.q_power(k - 1);
      if (D::is_zero(den)) throw std::domain_error("qhyper_terminating: vanishing denominator parameter");
      term_ratio_free = term_ratio_free * num / den;
      z_power *= z;
    }
    V variant = d.q_power(binom2(k) * e);
    if (sign_power(static_cast<long>(k) * e) < 0) variant = -variant;
    sum += term_ratio_free * variant * z_power;
  }
  return sum;
}

}  // namespace qglf
