#include <gtest/gtest.h>

#include "qglf/coeffs.hpp"
#include "qglf/qcalc.hpp"
#include "support.hpp"

using namespace qglf;
using qglf::testing::pascal_qbinomial;

namespace {

QPoly poly(std::vector<long> c, int low = 0) {
  std::vector<BigInt> b(c.begin(), c.end());
  return QPoly::from_coefficients(std::move(b), low);
}

using XQ = XPoly<QRational>;

XQ x_power(int k) {
  std::vector<QRational> c(static_cast<std::size_t>(k + 1), QRational(0));
  c.back() = QRational(1);
  return XQ(std::move(c));
}

}  // namespace

TEST(QPoly, RendersDescendingExponents) {
  EXPECT_EQ(poly({1, -1, 0, 2}).to_string(), "2*q^3 - q + 1");
  EXPECT_EQ(QPoly().to_string(), "0");
  EXPECT_EQ(poly({-1}, -2).to_string(), "-q^-2");
}

TEST(QPoly, NoStoredZeros) {
  const QPoly p = poly({0, 0, 3, 0}, -1);
  EXPECT_EQ(p.low(), 1);
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p - p, QPoly());
}

TEST(QPoly, ExactQuotient) {
  const QPoly a = poly({1, 1});
  const QPoly b = poly({-1, 0, 1});
  ASSERT_TRUE(b.exact_quotient(a).has_value());
  EXPECT_EQ(*b.exact_quotient(a), poly({-1, 1}));
  EXPECT_FALSE(poly({1, 0, 1}).exact_quotient(a).has_value());
}

TEST(QBinomial, Examples) {
  EXPECT_EQ(qbinomial(4, 2), poly({1, 1, 2, 1, 1}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(qbinomial(n, 0), QPoly(1));
  EXPECT_TRUE(qbinomial(3, 5).is_zero());
  EXPECT_TRUE(qbinomial(3, -1).is_zero());
}

TEST(QBinomial, PascalRecurrence) {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(qbinomial(n, k), qbinomial(n - 1, k - 1) + QPoly::q_power(k) * qbinomial(n - 1, k)) << n << "," << k;
      EXPECT_EQ(qbinomial(n, k), pascal_qbinomial(n, k));
    }
  }
}

TEST(QBinomial, AlternatingSumIsDelta) {
  for (int k = 0; k <= 12; ++k) {
    QPoly sum;
    for (int i = 0; i <= k; ++i) {
      QPoly term = QPoly::q_power(static_cast<int>(binom2(i))) * qbinomial(k, i);
      sum += (i % 2 == 0) ? term : -term;
    }
    EXPECT_EQ(sum, QPoly(k == 0 ? 1 : 0)) << k;
  }
}

TEST(QMultinomial, Examples) {
  EXPECT_EQ(qmultinomial(1, {0, 0, 1}), QPoly(1));
  EXPECT_EQ(qmultinomial(2, {1, 1}), poly({1, 1}));
  EXPECT_EQ(qmultinomial(3, {1, 1, 1}), poly({1, 2, 2, 1}));
  EXPECT_THROW(qmultinomial(3, {1, 1}), std::invalid_argument);
}

TEST(QMultinomial, IsProductOfBinomials) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      for (int c = 0; c <= 3; ++c) {
        EXPECT_EQ(qmultinomial(a + b + c, {a, b, c}), qbinomial(a + b + c, a) * qbinomial(b + c, b));
      }
    }
  }
}

TEST(Pochhammer, Examples) {
  const SymbolicQ s;
  EXPECT_EQ(marker_pochhammer(s, -1, 0), XQ::constant(1));
  EXPECT_EQ(marker_pochhammer(s, -1, 1), XQ({QRational(1), QRational(-1)}));
  const QRational q = QRational::q();
  EXPECT_EQ(q_pochhammer(s, q, 1, 2), (QRational(1) - q) * (QRational(1) - q * q));
  EXPECT_EQ(qq_pochhammer(s, 2), (QRational(1) - q) * (QRational(1) - q * q));
}

TEST(FallingBasis, Examples) {
  const SymbolicQ s;
  EXPECT_EQ(falling_basis(s, 0), XQ::constant(1));
  const QRational inv = QRational(1) / (QRational(1) - QRational::q());
  EXPECT_EQ(falling_basis(s, 1), XQ({inv, -inv}));
  EXPECT_EQ(falling_basis(s, 2).evaluate(QRational::q_power(4)), QRational(qbinomial(4, 2)));
}

TEST(FallingBasis, EvaluatesToQBinomialAtPowers) {
  const SymbolicQ s;
  for (int t = 0; t <= 6; ++t) {
    const XQ b = falling_basis(s, t);
    for (int N = 0; N <= 8; ++N) EXPECT_EQ(b.evaluate(QRational::q_power(N)), QRational(qbinomial(N, t))) << t << "," << N;
  }
}

TEST(FallingBasis, ClosedCoefficientsMatchProduct) {
  const SymbolicQ s;
  const NumericQ three(3);
  for (int t = 0; t <= 8; ++t) {
    const XQ b = falling_basis(s, t);
    for (int r = 0; r <= t; ++r) {
      EXPECT_EQ(falling_to_monomial(s, t, r), b.coefficient(r)) << t << "," << r;
      EXPECT_EQ(falling_to_monomial(three, t, r), three.evaluate(b.coefficient(r)));
    }
  }
}

TEST(FallingBasis, RoundTripIsIdentity) {
  const SymbolicQ s;
  for (int k = 0; k <= 12; ++k) {
    XQ back;
    for (int m = 0; m <= k; ++m) back += falling_basis(s, m) * monomial_to_falling(s, k, m);
    EXPECT_EQ(back, x_power(k)) << k;
  }
}

TEST(QHyper, TruncatesAtUnitParameter) {
  const SymbolicQ s;
  const QRational q = QRational::q();
  EXPECT_EQ(qhyper_terminating(s, {QRational(1), q}, {q * q}, q), QRational(1));
}

TEST(QHyper, TwoPhiOneMatchesClosedForm) {
  const SymbolicQ s;
  const QRational inv = QRational::q_power(-1);
  EXPECT_EQ(qhyper_terminating(s, {inv, inv}, {inv}, QRational(1)), (QRational::q() - QRational(1)) / QRational::q());
  auto phi = [&](int n, int t, int u) {
    return qhyper_terminating(s, {QRational::q_power(-t), QRational::q_power(-u)}, {QRational::q_power(1 - n)},
                              QRational::q_power(t + u - n));
  };
  EXPECT_EQ(phi(3, 1, 1), b_two(s, 3, 1, 1));
}

TEST(QHyper, RejectsNonTerminating) {
  const SymbolicQ s;
  EXPECT_THROW(qhyper_terminating(s, {QRational::q()}, {}, QRational(1)), std::invalid_argument);
}

TEST(QDifference, Examples) {
  const SymbolicQ s;
  EXPECT_TRUE(qdifference_iter(s, XQ::constant(5), 1).is_zero());
  EXPECT_EQ(qdifference_iter(s, x_power(2), 1), XQ({QRational(0), QRational(poly({1, 1}))}));
  EXPECT_EQ(qdifference_iter(s, x_power(2), 2), XQ::constant(QRational(poly({1, 1}))));
}

TEST(QDifference, MatchesIteratedExpansion) {
  const SymbolicQ s;
  auto g = qglf::testing::rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int deg = static_cast<int>(qglf::testing::uniform(g, 0, 8));
    std::vector<QRational> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(qglf::testing::uniform(g, -9, 9));
    const XQ f(c);
    for (int N = 0; N <= deg + 1; ++N) {
      const XQ lhs = qdifference_iter(s, f, N);
      for (const QRational& x : {QRational(1), QRational(3), QRational::q_power(2)}) {
        QRational rhs(0);
        for (int d = 0; d <= N; ++d) {
          QRational term = QRational::q_power(static_cast<int>(binom2(d))) * QRational(qbinomial(N, d)) *
                           f.evaluate(QRational::q_power(N - d) * x);
          rhs += d % 2 == 0 ? term : -term;
        }
        rhs = rhs / (QRational::q_power(static_cast<int>(binom2(N))) * pow(QRational::q() - QRational(1), N) * pow(x, N));
        EXPECT_EQ(lhs.evaluate(x), rhs) << "trial " << trial << " N " << N;
      }
    }
    if (f.degree() >= 0) {
      EXPECT_EQ(qdifference_iter(s, f, f.degree()), XQ::constant(QRational(qfactorial(f.degree())) * f.coefficient(f.degree())));
    }
  }
}

TEST(QRational, CanonicalFormIsStructural) {
  auto g = qglf::testing::rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const QRational a = qglf::testing::random_rational(g);
    const QRational b = qglf::testing::random_rational(g);
    EXPECT_EQ(a + b - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ(a * b / b, a);
    }
    EXPECT_EQ(a - a, QRational(0));
  }
}

TEST(QRational, AgreesWithNumericEvaluation) {
  auto g = qglf::testing::rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const QRational a = qglf::testing::random_rational(g);
    const QRational b = qglf::testing::random_rational(g);
    for (long qv : {2L, 3L, 5L, 7L}) {
      const Rational q(qv);
      Rational av, bv;
      try {
        av = a.evaluate(q);
        bv = b.evaluate(q);
      } catch (const std::domain_error&) {
        continue;
      }
      EXPECT_EQ((a + b).evaluate(q), Rational(av + bv));
      EXPECT_EQ((a * b).evaluate(q), Rational(av * bv));
      if (sgn(bv) != 0 && !b.is_zero()) {
        EXPECT_EQ((a / b).evaluate(q), Rational(av / bv));
      }
    }
  }
}

TEST(QRational, DenominatorIsNormalized) {
  const QRational r(poly({2, -2}), poly({-4, 0, 4}));  // (2 - 2q) / (4q^2 - 4) = -1 / (2q + 2)
  EXPECT_EQ(r, QRational(QPoly(-1), poly({2, 2})));
  EXPECT_TRUE(r.denominator().leading_coefficient() > 0);
  EXPECT_EQ(r.to_string(), "(-1)/(2*q + 2)");
  EXPECT_EQ(QRational(poly({3, 3}), poly({6})).to_string(), "(q + 1)/(2)");
  EXPECT_EQ((QRational::q() - QRational(1)) / QRational::q(), QRational(poly({-1, 1}), poly({0, 1})));
  EXPECT_EQ(((QRational::q() - QRational(1)) / QRational::q()).to_string(), "(q - 1)/(q)");
}

TEST(QRational, EvaluationAtPoleThrows) {
  const QRational r(QPoly(1), poly({-2, 1}));
  EXPECT_THROW(r.evaluate(Rational(2)), std::domain_error);
}

TEST(QRational, LimitAtOneCancelsVanishingFactors) {
  const QRational r(poly({-1, 0, 1}), poly({-1, 1}));
  EXPECT_EQ(r.limit_at_one(), Rational(2));
  const QRational s(poly({1, -2, 1}), poly({-1, 0, 0, 1}) * poly({-1, 1}));  // (q-1)^2 / ((q^3-1)(q-1))
  EXPECT_EQ(s.limit_at_one(), Rational(1, 3));
}

TEST(PolyGcd, DividesBothAndLeavesCoprimeCofactors) {
  auto g = qglf::testing::rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const QPoly a = qglf::testing::random_poly(g, 5, 20);
    const QPoly b = qglf::testing::random_poly(g, 5, 20);
    const QPoly c = qglf::testing::random_poly(g, 4, 20);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    const QPoly ac = a * c, bc = b * c;
    const QPoly gg = poly_gcd(ac, bc);
    ASSERT_TRUE(ac.exact_quotient(gg).has_value());
    ASSERT_TRUE(bc.exact_quotient(gg).has_value());
    EXPECT_TRUE(gg.exact_quotient(c.primitive_part()).has_value());
    const QPoly rest = poly_gcd(*ac.exact_quotient(gg), *bc.exact_quotient(gg));
    EXPECT_EQ(rest.degree(), 0);
  }
}
