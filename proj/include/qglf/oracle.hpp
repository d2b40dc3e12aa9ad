#pragma once

// Brute-force ground truth. Every count here comes from explicit enumeration
// of group elements or subspaces and never from a formula.

#include <map>
#include <stdexcept>
#include <vector>

#include "qglf/count_table.hpp"
#include "qglf/glnq.hpp"

namespace qglf {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  int threads = 1;
  double budget = 1e8;  // maximum number of enumerated tuples
};

/// Counts k-tuples (u_1..u_k) in GL_n(F_q) with u_1 ... u_k = c, indexed by
/// the fixed-space dimensions. The last factor is solved for, so |G|^{k-1}
/// tuples are visited; threads shard the first factor.
CountTable<BigInt> brute_count_gl(int n, long q, int k, const MatrixFq& c, const OracleOptions& opt = {});

/// Same for S_n and c = (1 2 ... n), indexed by numbers of cycles.
CountTable<BigInt> brute_count_sn(int n, int k, const OracleOptions& opt = {});

/// surj(d, r) = prod_{i<r} (q^d - q^i): surjections F_q^d -> F_q^r.
BigInt surjection_count(int d, int r, long q);

/// sum over c = uv of surj(fixed_dim u, r) surj(fixed_dim v, s).
BigInt colored_count(int n, long q, int r, int s, const OracleOptions& opt = {});

/// Tuples of subspaces (W_1..W_k) of F_q^m, dim W_i = r_i, meeting only in 0.
BigInt subspace_meet_count(int m, long q, const std::vector<int>& rs, const OracleOptions& opt = {});

/// Tuples of subsets of an m-set with the given sizes and empty common
/// intersection.
BigInt subset_meet_count(int m, const std::vector<int>& rs);

using GenusHistogram = std::map<int, BigInt>;

/// Histogram of (k-1) n - sum r_i over all factorizations of a regular
/// elliptic element into k factors.
GenusHistogram genus_stats(int n, long q, int k, const OracleOptions& opt = {});

Rational mean_genus(const GenusHistogram& h);

/// N_r = #{g in GL_n(F_q) : fixed_dim(g) = r}, r = 0..n.
std::vector<BigInt> fixed_dim_census(int n, long q);

}  // namespace qglf
