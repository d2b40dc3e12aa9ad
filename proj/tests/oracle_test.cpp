#include <gtest/gtest.h>

#include "binomial_basis.hpp"
#include "qglf/coeffs.hpp"
#include "qglf/genfun.hpp"
#include "qglf/oracle.hpp"
#include "qglf/qcalc.hpp"

using namespace qglf;

namespace {

std::map<std::vector<int>, BigInt> cells(const CountTable<BigInt>& t) { return t.entries; }

std::map<std::vector<int>, BigInt> as_integers(const CountTable<Rational>& t) {
  std::map<std::vector<int>, BigInt> out;
  for (const auto& [dims, v] : t.entries) {
    EXPECT_EQ(v.get_den(), 1);
    out[dims] = v.get_num();
  }
  return out;
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

TEST(BruteCountGl, Examples) {
  const auto c2 = find_regular_elliptic(2, 2, false);
  const std::map<std::vector<int>, BigInt> expected{{{2, 0}, 1}, {{0, 2}, 1}, {{1, 1}, 3}, {{0, 0}, 1}};
  EXPECT_EQ(cells(brute_count_gl(2, 2, 2, c2)), expected);
  EXPECT_EQ(brute_count_gl(2, 2, 3, c2).at({1, 1, 1}), 0);
  EXPECT_EQ(brute_count_gl(3, 2, 2, find_regular_elliptic(3, 2, false)).at({1, 1}), 56);
}

TEST(BruteCountGl, MatchesBothFormulaPaths) {
  for (auto [n, q, k] : std::vector<std::tuple<int, long, int>>{{1, 3, 2}, {1, 5, 3}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {2, 2, 3}, {3, 2, 3}, {4, 2, 2}}) {
    const NumericQ d(q);
    const auto brute = cells(brute_count_gl(n, q, k, find_regular_elliptic(n, q, false)));
    EXPECT_EQ(brute, as_integers(a_table(d, n, k, Path::ClosedForm))) << n << "," << q << "," << k;
    EXPECT_EQ(brute, as_integers(a_table(d, n, k, Path::CharacterSum))) << n << "," << q << "," << k;
  }
}

TEST(BruteCountGl, TotalIsGroupPower) {
  for (auto [n, q, k] : std::vector<std::tuple<int, long, int>>{{2, 2, 2}, {2, 3, 3}, {3, 2, 2}, {2, 2, 4}}) {
    const auto t = brute_count_gl(n, q, k, find_regular_elliptic(n, q, false));
    BigInt expected = 1;
    for (int i = 1; i < k; ++i) expected *= group_order(n, q);
    EXPECT_EQ(t.total(), expected);
  }
}

TEST(BruteCountGl, IndependentOfChosenElement) {
  for (auto [n, q] : std::vector<std::pair<int, long>>{{2, 2}, {3, 2}, {2, 3}}) {
    std::vector<MatrixFq> elliptic;
    for (const auto& m : enumerate_gl(n, q)) {
      if (is_regular_elliptic(m)) elliptic.push_back(m);
    }
    ASSERT_GE(elliptic.size(), 2U);
    const auto reference = cells(brute_count_gl(n, q, 2, elliptic.front()));
    for (std::size_t i = 1; i < elliptic.size(); i += 3) EXPECT_EQ(cells(brute_count_gl(n, q, 2, elliptic[i])), reference);
  }
}

TEST(BruteCountGl, ThreadCountDoesNotChangeResult) {
  const auto c = find_regular_elliptic(3, 2, false);
  const auto one = cells(brute_count_gl(3, 2, 3, c, {1, 1e8}));
  for (int threads : {2, 3, 7}) EXPECT_EQ(cells(brute_count_gl(3, 2, 3, c, {threads, 1e8})), one) << threads;
}

TEST(BruteCountGl, Errors) {
  EXPECT_THROW(brute_count_gl(4, 2, 3, find_regular_elliptic(4, 2, false)), BudgetExceeded);
  const auto c = find_regular_elliptic(3, 2, false);
  EXPECT_THROW(brute_count_gl(3, 2, 2, c, {1, 100}), BudgetExceeded);
  EXPECT_THROW(brute_count_gl(2, 2, 2, MatrixFq::identity(2, 2)), std::invalid_argument);
  EXPECT_THROW(brute_count_gl(2, 2, 2, MatrixFq(2, 2, {1, 1, 1, 0}) * MatrixFq(2, 2, {0, 1, 1, 0})), std::invalid_argument);
}

TEST(BruteCountSn, Examples) {
  const std::map<std::vector<int>, BigInt> expected{{{3, 1}, 1}, {{1, 3}, 1}, {{1, 1}, 1}, {{2, 2}, 3}};
  EXPECT_EQ(cells(brute_count_sn(3, 2)), expected);
  EXPECT_EQ(brute_count_sn(4, 3).total(), 576);
  EXPECT_THROW(brute_count_sn(9, 3), BudgetExceeded);
}

TEST(BruteCountSn, TwoFactorCoefficientSystem) {
  for (int n = 1; n <= 6; ++n) {
    const auto coeffs = qglf::testing::binomial_basis_coefficients(brute_count_sn(n, 2), 2, n, factorial(n));
    for (int t = 0; t <= n; ++t) {
      for (int u = 0; u <= n; ++u) {
        // multinomial (n-1; t-1, u-1, n-t-u+1)
        BigInt expected = 0;
        if (t >= 1 && u >= 1 && n - t - u + 1 >= 0) expected = binomial(n - 1, t - 1) * binomial(n - t, u - 1);
        EXPECT_EQ(coeffs[static_cast<std::size_t>(t * (n + 1) + u)], Rational(expected)) << n << "," << t << "," << u;
      }
    }
  }
}

TEST(BruteCountSn, ThreeFactorCoefficientSystem) {
  for (int n = 1; n <= 5; ++n) {
    const auto coeffs = qglf::testing::binomial_basis_coefficients(brute_count_sn(n, 3), 3, n, factorial(n) * factorial(n));
    std::size_t cell = 0;
    for (const auto& p : all_dim_vectors(3, 0, n)) {
      BigInt expected = 0;
      if (p[0] >= 1 && p[1] >= 1 && p[2] >= 1) expected = m_classical(n - 1, {p[0] - 1, p[1] - 1, p[2] - 1});
      EXPECT_EQ(coeffs[cell++], Rational(expected)) << n;
    }
  }
}

TEST(ColoredCount, Examples) {
  EXPECT_EQ(colored_count(2, 2, 1, 1), 3);
  EXPECT_EQ(colored_count(2, 2, 2, 0), 6);
  EXPECT_EQ(colored_count(2, 2, 2, 2), 0);
}

TEST(ColoredCount, EqualsScaledFallingCoefficient) {
  for (auto [n, q] : std::vector<std::pair<int, long>>{{2, 2}, {2, 3}, {3, 2}}) {
    const NumericQ d(q);
    for (int r = 0; r <= n; ++r) {
      for (int s = 0; s <= n; ++s) {
        EXPECT_EQ(Rational(colored_count(n, q, r, s)), gl_order(d, n) * b_two(d, n, r, s)) << n << "," << q << "," << r << "," << s;
      }
    }
  }
}

TEST(SurjectionCount, SmallCases) {
  EXPECT_EQ(surjection_count(2, 2, 2), 6);
  EXPECT_EQ(surjection_count(2, 3, 2), 0);
  EXPECT_EQ(surjection_count(3, 0, 5), 1);
}

TEST(SubspaceMeet, Examples) {
  // pairs of distinct lines in F_2^2
  EXPECT_EQ(subspace_meet_count(2, 2, {1, 1}), 6);
  for (int m = 0; m <= 3; ++m) EXPECT_EQ(subspace_meet_count(m, 3, {0, 0}), 1);
  EXPECT_EQ(subspace_meet_count(2, 3, {1, 2}), 0);
}

TEST(SubspaceMeet, MatchesAlternatingSum) {
  for (auto [m, q, kmax] : std::vector<std::tuple<int, long, int>>{{1, 2, 3}, {2, 2, 3}, {3, 2, 3}, {2, 3, 3}, {3, 3, 2}, {4, 2, 2}}) {
    const NumericQ d(q);
    for (int k = 1; k <= kmax; ++k) {
      for (const auto& rs : all_dim_vectors(k, 0, m)) {
        // sum_a (-1)^a q^{binom(a,2)} [m a] prod [m-a, r_i-a]; m_q has q^{binom(a+1,2) - k a} instead
        Rational subspace_sum = 0, mq_sum = 0;
        const int lo = *std::min_element(rs.begin(), rs.end());
        for (int a = 0; a <= lo; ++a) {
          Rational core = q_binomial(d, m, a);
          for (int r : rs) core *= q_binomial(d, m - a, r - a);
          if (a % 2 == 1) core = -core;
          subspace_sum += d.q_power(binom2(a)) * core;
          mq_sum += d.q_power(binom2(a + 1) - static_cast<long>(k) * a) * core;
        }
        EXPECT_EQ(Rational(subspace_meet_count(m, q, rs)), subspace_sum) << m << "," << q;
        EXPECT_EQ(m_q(d, m, rs), mq_sum);
      }
    }
  }
}

TEST(GenusStats, Examples) {
  const GenusHistogram expected{{0, 5}, {2, 1}};
  const auto h = genus_stats(2, 2, 2);
  EXPECT_EQ(h, expected);
  EXPECT_EQ(mean_genus(h), Rational(1, 3));
  EXPECT_EQ(mean_genus(genus_stats(3, 2, 2)), expected_genus(NumericQ(2), 3));
  BigInt total = 0;
  for (const auto& [g, count] : genus_stats(3, 2, 3)) {
    EXPECT_GE(g, 0);
    EXPECT_LE(g, 6);
    total += count;
  }
  EXPECT_EQ(total, 168 * 168);
}

TEST(SubsetMeet, SmallCases) {
  EXPECT_EQ(subset_meet_count(2, {1, 1}), 2);
  EXPECT_EQ(subset_meet_count(3, {}), 0);
  EXPECT_EQ(subset_meet_count(4, {0, 0}), 1);
}
