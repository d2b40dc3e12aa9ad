#pragma once

// Recovers the coefficients of prod_i C(x_i, p_i) in a count generating
// function from its values at integer points, by forward differences.

#include <vector>

#include "qglf/count_table.hpp"
#include "qglf/qpoly.hpp"

namespace qglf::testing {

/// c[p] for p in [0, n]^k (flattened, first axis most significant) such that
/// (1/scale) sum a_r x^r = sum_p c[p] prod C(x_i, p_i).
inline std::vector<Rational> binomial_basis_coefficients(const CountTable<BigInt>& table, int k, int n,
                                                         const BigInt& scale) {
  const std::size_t side = static_cast<std::size_t>(n + 1);
  std::size_t cells = 1;
  for (int i = 0; i < k; ++i) cells *= side;

  std::vector<Rational> v(cells, Rational(0));
  for (std::size_t cell = 0; cell < cells; ++cell) {
    std::vector<long> x(static_cast<std::size_t>(k));
    std::size_t rest = cell;
    for (int i = k - 1; i >= 0; --i) {
      x[static_cast<std::size_t>(i)] = static_cast<long>(rest % side);
      rest /= side;
    }
    Rational sum = 0;
    for (const auto& [dims, count] : table.entries) {
      BigInt term = count;
      for (int i = 0; i < k; ++i) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(x[static_cast<std::size_t>(i)]),
                      static_cast<unsigned long>(dims[static_cast<std::size_t>(i)]));
        term *= p;
      }
      sum += term;
    }
    v[cell] = sum / scale;
  }

  std::size_t stride = 1;
  for (int axis = k - 1; axis >= 0; --axis) {
    for (std::size_t base = 0; base < cells; ++base) {
      if ((base / stride) % side != 0) continue;  // one line per starting cell
      for (std::size_t t = 1; t < side; ++t) {
        for (std::size_t j = side - 1; j >= t; --j) v[base + j * stride] -= v[base + (j - 1) * stride];
      }
    }
    stride *= side;
  }
  return v;
}

}  // namespace qglf::testing
