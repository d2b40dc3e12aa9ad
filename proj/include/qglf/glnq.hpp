#pragma once

// Linear algebra over a prime field F_q, enumeration of GL_n(F_q), and
// detection of regular elliptic and Singer elements.

#include <cstdint>
#include <string>
#include <vector>

#include "qglf/qpoly.hpp"

namespace qglf {

bool is_prime(long q);

/// n x n matrix over F_q, q prime, entries reduced to [0, q).
class MatrixFq {
 public:
  MatrixFq(int n, std::uint32_t q);
  MatrixFq(int n, std::uint32_t q, std::vector<std::uint32_t> entries);

  static MatrixFq identity(int n, std::uint32_t q);

  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t at(int i, int j) const { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, std::uint32_t v) { e_[static_cast<std::size_t>(i * n_ + j)] = v % q_; }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  int rank() const;
  bool invertible() const { return rank() == n_; }
  /// Throws std::domain_error if singular.
  MatrixFq inverse() const;
  MatrixFq pow(unsigned long long e) const;

  MatrixFq operator*(const MatrixFq& o) const;
  MatrixFq operator-(const MatrixFq& o) const;
  bool operator==(const MatrixFq& o) const = default;

  std::string to_string() const;

 private:
  int n_;
  std::uint32_t q_;
  std::vector<std::uint32_t> e_;
};

/// Polynomial over F_q; coeffs[i] multiplies x^i. No trailing zeros.
struct PolyFq {
  std::uint32_t q = 2;
  std::vector<std::uint32_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  void trim();
  bool operator==(const PolyFq& o) const = default;
  std::string to_string() const;
};

PolyFq poly_mul(const PolyFq& a, const PolyFq& b);
/// Remainder of a modulo a nonzero b.
PolyFq poly_mod(const PolyFq& a, const PolyFq& b);

/// Monic polynomial of degree `deg` whose lower coefficients are the base-q
/// digits of `index` (a_0 least significant).
PolyFq monic_from_index(std::uint32_t q, int deg, unsigned long long index);

/// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const PolyFq& f);

/// Number of monic irreducibles of degree n over F_q (necklace formula).
BigInt count_monic_irreducible(int n, long q);

BigInt group_order(int n, long q);

/// Every invertible matrix, row-major lexicographic in the entries. Throws
/// std::length_error when n^2 log2(q) exceeds budget_bits.
std::vector<MatrixFq> enumerate_gl(int n, long q, double budget_bits = 25.0);

/// n - rank(m - I).
int fixed_dim(const MatrixFq& m);

/// Monic characteristic polynomial det(xI - m), via Hessenberg reduction.
PolyFq char_poly(const MatrixFq& m);

/// Ones on the superdiagonal, last row -a_0, ..., -a_{n-1}.
MatrixFq companion(const PolyFq& f);

/// Invertible, irreducible characteristic polynomial, no nonzero fixed vector.
bool is_regular_elliptic(const MatrixFq& m);

/// Multiplicative order equals q^n - 1.
bool is_singer(const MatrixFq& m);

/// Companion matrix of the first irreducible monic polynomial (in index
/// order) that yields a regular elliptic (or Singer) element.
MatrixFq find_regular_elliptic(int n, long q, bool want_singer);

/// All regular elliptic companion matrices, in index order.
std::vector<MatrixFq> regular_elliptic_companions(int n, long q);

}  // namespace qglf
