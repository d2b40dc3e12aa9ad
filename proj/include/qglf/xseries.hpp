#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "qglf/qcalc.hpp"

namespace qglf {

enum class Basis { Monomial, Falling };

/// Multivariate generating function F(x_1, ..., x_k) of bounded degree n in
/// each marker, written either in monomials x^r or in the falling basis
/// B_t(x) = (x; q^-1)_t / (q; q)_t. Keys are exponent/index vectors of
/// length `arity` with entries in [0, rank]; zero coefficients are not kept.
template <class V>
struct XSeries {
  int arity = 0;
  int rank = 0;
  Basis basis = Basis::Monomial;
  std::map<std::vector<int>, V> terms;

  V coefficient(const std::vector<int>& index) const {
    auto it = terms.find(index);
    return it == terms.end() ? V(0) : it->second;
  }

  void add(const std::vector<int>& index, const V& value) {
    if (static_cast<int>(index.size()) != arity) throw std::invalid_argument("XSeries: index arity mismatch");
    for (int i : index) {
      if (i < 0 || i > rank) throw std::invalid_argument("XSeries: index outside [0, rank]");
    }
    if (qglf::is_zero(value)) return;
    auto [it, inserted] = terms.emplace(index, value);
    if (!inserted) {
      it->second += value;
      if (qglf::is_zero(it->second)) terms.erase(it);
    }
  }

  friend bool operator==(const XSeries& a, const XSeries& b) {
    return a.arity == b.arity && a.rank == b.rank && a.basis == b.basis && a.terms == b.terms;
  }
};

/// Re-expands a series in the other basis, one marker at a time.
template <ExactDomain D>
XSeries<typename D::value_type> change_basis(const D& d, const XSeries<typename D::value_type>& in, Basis target) {
  using V = typename D::value_type;
  if (in.basis == target) return in;
  const int n = in.rank;
  // matrix[from][to]
  std::vector<std::vector<V>> matrix(static_cast<std::size_t>(n + 1),
                                     std::vector<V>(static_cast<std::size_t>(n + 1), V(0)));
  for (int from = 0; from <= n; ++from) {
    for (int to = 0; to <= from; ++to) {
      matrix[from][to] = target == Basis::Monomial ? falling_to_monomial(d, from, to) : monomial_to_falling(d, from, to);
    }
  }
  XSeries<V> current = in;
  for (int axis = 0; axis < in.arity; ++axis) {
    XSeries<V> next{in.arity, n, target, {}};
    for (const auto& [index, value] : current.terms) {
      std::vector<int> key = index;
      const int from = index[static_cast<std::size_t>(axis)];
      for (int to = 0; to <= from; ++to) {
        const V& m = matrix[from][to];
        if (qglf::is_zero(m)) continue;
        key[static_cast<std::size_t>(axis)] = to;
        next.add(key, value * m);
      }
    }
    current = std::move(next);
  }
  current.basis = target;
  return current;
}

/// F evaluated with marker i set to markers[i].
template <ExactDomain D>
typename D::value_type evaluate(const D& d, const XSeries<typename D::value_type>& f,
                                const std::vector<typename D::value_type>& markers) {
  using V = typename D::value_type;
  if (static_cast<int>(markers.size()) != f.arity) throw std::invalid_argument("evaluate: marker count mismatch");
  std::vector<std::vector<V>> table(markers.size());
  for (std::size_t i = 0; i < markers.size(); ++i) {
    for (int t = 0; t <= f.rank; ++t) {
      table[i].push_back(f.basis == Basis::Monomial ? d.from_int(1) : falling_basis(d, t).evaluate(markers[i]));
      if (f.basis == Basis::Monomial && t > 0) table[i][t] = table[i][t - 1] * markers[i];
    }
  }
  V sum = d.from_int(0);
  for (const auto& [index, value] : f.terms) {
    V term = value;
    for (std::size_t i = 0; i < index.size(); ++i) term *= table[i][static_cast<std::size_t>(index[i])];
    sum += term;
  }
  return sum;
}

}  // namespace qglf
