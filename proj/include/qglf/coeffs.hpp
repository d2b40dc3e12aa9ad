#pragma once

// Closed-form coefficients and counts for factorizations of a regular
// elliptic element c of G = GL_n(F_q), indexed by fixed-space dimension.
//
// Conventions: b-coefficients are the coefficients of prod_i B_{p_i}(x_i) in
// F(x_1..x_k) / |G|^{k-1}; a-counts are the raw numbers of tuples
// (u_1, ..., u_k) with u_1 ... u_k = c and dim ker(u_i - 1) = r_i.
// Inputs for which the count is genuinely zero return zero; inputs for which
// a formula is undefined throw std::invalid_argument.

#include <string>
#include <vector>

#include "qglf/domain.hpp"
#include "qglf/multi_laurent.hpp"

namespace qglf {

/// Classical M^m_{r_1..r_k} = sum_d (-1)^d C(m,d) prod_i C(m-d, r_i-d):
/// the number of tuples of r_i-subsets of [m] with empty common intersection.
/// The empty index list gives 0.
BigInt m_classical(int m, const std::vector<int>& rs);

/// q-analogue M^m_{r}(q) = sum_d (-1)^d q^{binom(d+1,2) - kd} [m d] prod [m-d, r_i-d];
/// a Laurent polynomial in q, zero for the empty index list.
template <ExactDomain D>
typename D::value_type m_q(const D& d, int m, const std::vector<int>& rs);

/// Coefficient of B_t(x) B_u(y) in F(x, y) / |G| for two factors.
template <ExactDomain D>
typename D::value_type b_two(const D& d, int n, int t, int u);

/// Coefficient of prod B_{p_i}(x_i) in F / |G|^{k-1}:
/// M^{n-1}_{p~}(q) / prod_{p in p~} [n-1 p]_q, where p~ drops every entry equal to n.
template <ExactDomain D>
typename D::value_type b_multi(const D& d, int n, const std::vector<int>& p);

/// Genus-0 count q^{sum (n - r_i - 1) r_i} (q^n - 1)^{k-1}.
/// Requires sum r_i = (k-1) n and 0 <= r_i < n.
template <ExactDomain D>
typename D::value_type genus0_count(const D& d, int n, const std::vector<int>& r);

/// Number of factorizations of c into l reflections (closed product formula).
template <ExactDomain D>
typename D::value_type reflection_count(const D& d, int n, int l);

/// The Laurent polynomial P_g(x, y, z; q) for g >= 1, coefficients in the domain.
template <ExactDomain D>
MultiLaurent<typename D::value_type> p_g_polynomial(const D& d, int g);

/// sum_{(a,b,c)} coeff * q^{n a + r b + s c}: P evaluated at (q^n, q^r, q^s).
template <ExactDomain D>
typename D::value_type evaluate_at_q_powers(const D& d, const MultiLaurent<typename D::value_type>& p, int n, int r,
                                            int s);

/// a_{r,s}(q) for r, s > 0 and genus g = n - r - s > 0 via P_g.
template <ExactDomain D>
typename D::value_type a_two_explicit(const D& d, int n, int r, int s);

/// a_{r,s}(q) for any (r, s) by expanding the two-factor falling-basis
/// expansion into monomials and reading off x^r y^s.
template <ExactDomain D>
typename D::value_type a_two_cell(const D& d, int n, int r, int s);

struct GrowthRatio {
  int g = 0;
  long q = 0;
  int n = 0;
  BigInt count;            // N_g(n), boundary cells included
  Rational ratio_squared;  // N_g(n)^2 |GL_g|^2 / q^{(n+g)^2}
  std::string decimal;     // sqrt(ratio_squared), truncated to 30 places
};

/// Growth of genus-g two-factor counts against q^{(n+g)^2/2} / |GL_g(F_q)|.
GrowthRatio growth_ratio(int g, long q, int n);

/// sqrt(x) for x >= 0, truncated (not rounded) to `digits` decimal places.
std::string decimal_sqrt(const Rational& x, int digits);

}  // namespace qglf
