// Polynomial gcd over Z: heuristic gcd (evaluation at a large integer and
// reconstruction from balanced digits) with a primitive PRS fallback.

#include <algorithm>
#include <stdexcept>

#include "qglf/qpoly.hpp"

namespace qglf {
namespace {

BigInt max_norm(const QPoly& p) {
  BigInt m = 0;
  for (const auto& c : p.dense()) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

QPoly normalized_primitive(const QPoly& p) { return p.primitive_part(); }

// Balanced base-xi digits of gamma, read as polynomial coefficients.
QPoly reconstruct(BigInt gamma, const BigInt& xi) {
  std::vector<BigInt> coeffs;
  BigInt half = xi / 2;
  BigInt digit;
  while (gamma != 0) {
    mpz_fdiv_r(digit.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
    if (digit > half) digit -= xi;
    coeffs.push_back(digit);
    gamma -= digit;
    mpz_divexact(gamma.get_mpz_t(), gamma.get_mpz_t(), xi.get_mpz_t());
  }
  return QPoly::from_coefficients(std::move(coeffs));
}

bool divides(const QPoly& d, const QPoly& p) { return p.exact_quotient(d).has_value(); }

// Pseudo-remainder of a by b (deg a >= deg b), both with zero low exponent.
QPoly pseudo_remainder(const QPoly& a, const QPoly& b) {
  std::vector<BigInt> rem = a.dense();
  const auto& bd = b.dense();
  const std::size_t m = bd.size();
  const BigInt& lead = bd.back();
  while (rem.size() >= m) {
    BigInt top = rem.back();
    const std::size_t shift = rem.size() - m;
    for (auto& c : rem) c *= lead;
    for (std::size_t j = 0; j < m; ++j) rem[shift + j] -= top * bd[j];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  return QPoly::from_coefficients(std::move(rem));
}

QPoly prs_gcd(QPoly a, QPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    QPoly r = pseudo_remainder(a.shifted(-a.low()), b.shifted(-b.low()));
    a = std::move(b);
    b = r.is_zero() ? r : normalized_primitive(r);
  }
  return normalized_primitive(a);
}

// a, b primitive, nonconstant, not divisible by q.
QPoly heuristic_gcd(const QPoly& a, const QPoly& b) {
  BigInt xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  const long max_bits = 6000L * std::max(a.degree(), b.degree()) + 60000L;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (static_cast<long>(mpz_sizeinbase(xi.get_mpz_t(), 2)) * std::max(a.degree(), b.degree()) > max_bits) break;
    BigInt va = a.evaluate(xi);
    BigInt vb = b.evaluate(xi);
    BigInt gamma;
    mpz_gcd(gamma.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    QPoly g = normalized_primitive(reconstruct(gamma, xi));
    if (!g.is_zero() && divides(g, a) && divides(g, b)) return g;
    xi = xi * 73794 / 27011;
  }
  return prs_gcd(a, b);
}

}  // namespace

QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (!a.is_polynomial() || !b.is_polynomial()) {
    throw std::invalid_argument("poly_gcd: Laurent input");
  }
  if (a.is_zero()) return normalized_primitive(b);
  if (b.is_zero()) return normalized_primitive(a);
  const int shift = std::min(a.low(), b.low());
  QPoly pa = normalized_primitive(a.shifted(-a.low()));
  QPoly pb = normalized_primitive(b.shifted(-b.low()));
  QPoly g;
  if (pa.degree() == 0 || pb.degree() == 0) {
    g = QPoly(1);
  } else if (pa == pb) {
    g = pa;
  } else if (pa.degree() <= pb.degree() && divides(pa, pb)) {
    g = pa;
  } else if (pb.degree() < pa.degree() && divides(pb, pa)) {
    g = pb;
  } else {
    g = heuristic_gcd(pa, pb);
  }
  return g.shifted(shift);
}

}  // namespace qglf
