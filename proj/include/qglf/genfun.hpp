#pragma once

// Character generating functions and the assembly of the factorization
// generating function F(x_1..x_k) for a regular elliptic c in GL_n(F_q).
//
// Only two kinds of irreducible character contribute: primary characters
// over a nontrivial cuspidal (all share one generating function), and the
// hook characters (1, <d, 1^{n-d}>) of the trivial cuspidal, d = 0..n-1. The
// non-hook part is recovered from the vanishing of the regular character at
// c, so F is assembled from hook data alone.

#include <vector>

#include "qglf/count_table.hpp"
#include "qglf/domain.hpp"
#include "qglf/xpoly.hpp"
#include "qglf/xseries.hpp"

namespace qglf {

struct CharKind {
  enum class Type { GenericCuspidal, Hook };
  Type type = Type::GenericCuspidal;
  int d = 0;  // hook leg length, only meaningful for Type::Hook

  static CharKind generic() { return {Type::GenericCuspidal, 0}; }
  static CharKind hook(int d) { return {Type::Hook, d}; }
};

/// f_V(x) = sum_r chi~_V(z_r) x^r stored by its falling-basis coefficients
/// (index 0..n); the |G| factor is included.
template <class V>
struct CharSeries {
  int n = 0;
  CharKind kind;
  std::vector<V> falling;
};

/// Normalized character value chi~_V(z_r), where z_r sums the elements of
/// fixed-space dimension r.
template <ExactDomain D>
typename D::value_type char_zr(const D& d, int n, CharKind kind, int r);

/// Degree q^{binom(d+1,2)} [n-1 d]_q of the hook character.
template <ExactDomain D>
typename D::value_type hook_degree(const D& d, int n, int hook);

/// Value (-1)^d of the hook character on a regular elliptic element.
inline int hook_value_on_elliptic(int hook) { return hook % 2 == 0 ? 1 : -1; }

/// sum_d (-1)^d deg(hook d): the hook part of the regular character at c.
template <ExactDomain D>
typename D::value_type hook_regular_sum(const D& d, int n);

template <ExactDomain D>
CharSeries<typename D::value_type> f_easy(const D& d, int n);

template <ExactDomain D>
CharSeries<typename D::value_type> f_hook(const D& d, int n, int hook);

/// Monomial-basis expansion of a character series.
template <ExactDomain D>
XPoly<typename D::value_type> to_monomial(const D& d, const CharSeries<typename D::value_type>& f);

/// F / |G|^{k-1} in the falling basis, assembled from the hook characters.
template <ExactDomain D>
XSeries<typename D::value_type> assemble_F(const D& d, int n, int k);

/// F / |G|^{k-1} in the falling basis from the closed-form coefficients
/// (b_two for k = 2, b_multi otherwise).
template <ExactDomain D>
XSeries<typename D::value_type> closed_form_F(const D& d, int n, int k);

enum class Path { ClosedForm, CharacterSum };

/// Full table of a_{r_1..r_k}(q): the chosen falling-basis series converted
/// to monomials and scaled by |G|^{k-1}.
template <ExactDomain D>
CountTable<typename D::value_type> a_table(const D& d, int n, int k, Path path);

/// N_r = #{g in GL_n(F_q) : dim ker(g - 1) = r}, r = 0..n.
template <ExactDomain D>
std::vector<typename D::value_type> fulman_series(const D& d, int n);

/// Expected genus of a uniformly random two-factor factorization of c.
template <ExactDomain D>
typename D::value_type expected_genus(const D& d, int n);

}  // namespace qglf
