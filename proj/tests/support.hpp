#pragma once

#include <random>
#include <vector>

#include "qglf/qpoly.hpp"
#include "qglf/qrational.hpp"

namespace qglf::testing {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline long uniform(std::mt19937_64& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

inline QPoly random_poly(std::mt19937_64& g, int max_degree, long bound, int low = 0) {
  std::vector<BigInt> c;
  const int deg = static_cast<int>(uniform(g, 0, max_degree));
  for (int i = 0; i <= deg; ++i) c.emplace_back(uniform(g, -bound, bound));
  return QPoly::from_coefficients(std::move(c), low);
}

inline QRational random_rational(std::mt19937_64& g) {
  QPoly den;
  while (den.is_zero()) den = random_poly(g, 3, 4);
  return QRational(random_poly(g, 4, 6, static_cast<int>(uniform(g, -2, 2))), den);
}

// q-binomial from the Pascal recurrence, independent of the product formula
// used by the library.
inline QPoly pascal_qbinomial(int n, int k) {
  if (k < 0 || k > n) return QPoly();
  std::vector<std::vector<QPoly>> t(static_cast<std::size_t>(n + 1));
  for (int a = 0; a <= n; ++a) {
    t[static_cast<std::size_t>(a)].resize(static_cast<std::size_t>(a + 1));
    for (int b = 0; b <= a; ++b) {
      if (b == 0 || b == a) {
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = QPoly(1);
      } else {
        t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
            QPoly::q_power(b) * t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
      }
    }
  }
  return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace qglf::testing
