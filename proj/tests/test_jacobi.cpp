#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "awvec/jacobi.hpp"
#include "support.hpp"

using namespace awvec;
using namespace awvec::testing;

namespace {

using JP = JacobiParams<Rational>;

JP canonical_jac() { return JP(R("1/2"), R("1/3")); }

JP random_jac(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 12), den(2, 6);
  auto draw = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  for (;;) {
    JP p(draw(), draw());
    if (p.positive_range()) return p;
  }
}

Rational Y_at(const LP& f, const Rational& z0, const JP& p) {
  Rational s = p.s();
  Rational deriv = f.derivative().eval(z0);
  Rational refl = f.eval(z0) - f.eval(1 / z0);
  Rational coef = (s + (p.alpha - p.beta) * z0) / (1 - z0 * z0);
  return -z0 * deriv + coef * refl - s * f.eval(z0);
}

}  // namespace

TEST(JacPoly, Examples) {
  JP p = canonical_jac();
  EXPECT_EQ(jac_poly(0, p), SP(R(1)));
  JP sym(R("2/3"), R("2/3"));
  EXPECT_EQ(jac_poly(1, sym).laurent(), z(1) + z(-1));
  Rational c = -2 + 4 * (p.alpha + 1) / (p.alpha + p.beta + 2);
  EXPECT_EQ(jac_poly(1, p).laurent(), z(1) + z(-1) + LP(c));
  for (int n = 0; n <= 6; ++n) {
    SP P = jac_poly(n, p);
    EXPECT_EQ(P.degree(), n);
    EXPECT_EQ(P.coeff(n), R(1));
  }
  EXPECT_THROW(jac_poly(-1, p), InvalidParameters);
}

TEST(JacPoly, HypergeometricMatchesRecurrence) {
  JP p = canonical_jac();
  for (int n = 0; n <= 8; ++n)
    EXPECT_EQ(jac_poly(n, p, JacMethod::Hypergeometric), jac_poly(n, p, JacMethod::Recurrence)) << "n=" << n;
}

TEST(JacPoly, SingularParameters) {
  // alpha = -2: (alpha+1)_k vanishes at k = 2
  EXPECT_THROW(jac_poly(2, JP(R(-2), R("1/3"))), ParameterSingularity);
  // n + alpha + beta + 1 = 0 at n = 1
  EXPECT_THROW(jac_poly(1, JP(R("-3/2"), R("-1/2"))), ParameterSingularity);
}

TEST(JacShiftPoly, Examples) {
  JP p = canonical_jac();
  EXPECT_EQ(jac_shift_poly(0, p), OP(R(1)));
  EXPECT_EQ(jac_shift_poly(1, p), OP::x() - OP(Rational((p.alpha + 1) / (p.alpha + p.beta + 2))));
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(jac_relation_residual(n, p).is_zero()) << "n=" << n;
}

TEST(JacNorm, RatioIsRecurrenceC) {
  JP p = canonical_jac();
  EXPECT_EQ(jac_norm(0, p), R(1));
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(jac_norm(n, p) / jac_norm(n - 1, p), jac_recurrence_coeffs(n, p).second);
}

TEST(JacE, Examples) {
  JP p = canonical_jac();
  EXPECT_EQ(jac_E_laurent(0, p), LP(R(1)));
  LP Em2 = jac_E_laurent(-2, p);
  EXPECT_EQ(jac_Y_apply(Em2, p), Em2 * R(2));
  LP E2 = jac_E_laurent(2, p);
  EXPECT_EQ(jac_Y_apply(E2, p), E2 * Rational(-(2 + p.alpha + p.beta + 1)));
  for (int n = -4; n <= 4; ++n) EXPECT_EQ(jacobi_join(jac_E_vec(n, p)), jac_E_laurent(n, p)) << "n=" << n;
}

TEST(JacY, Examples) {
  JP p = canonical_jac();
  EXPECT_EQ(jac_Y_apply(LP(R(1)), p), LP(Rational(-p.s())));
  LP Em1 = jac_E_laurent(-1, p);
  EXPECT_EQ(jac_Y_apply(Em1, p), Em1);
  // z^3 against a pointwise evaluation of the operator
  LP Yz3 = jac_Y_apply(z(3), p);
  for (const char* pt : {"3/7", "-5/2", "11/13"}) EXPECT_EQ(Yz3.eval(R(pt)), Y_at(z(3), R(pt), p)) << pt;
  // derivative term alone on a symmetric input cancels the reflection term
  SP w = SP::sym_monomial(3);
  EXPECT_EQ(jac_Y_apply(w.laurent(), p), w.laurent() * Rational(-p.s()) - (z(3, R(3)) - z(-3, R(3))));
}

TEST(JacYMatrix, Examples) {
  JP p = canonical_jac();
  VecSymPair<Rational> one{SP(R(1)), SP()};
  EXPECT_EQ(jac_Y_matrix_apply(one, p), (VecSymPair<Rational>{SP(Rational(-p.s())), SP()}));
  for (int n = 1; n <= 4; ++n) {
    VecSymPair<Rational> v = jac_E_vec(-n, p);
    EXPECT_EQ(jac_Y_matrix_apply(v, p), R(n) * v) << "n=" << n;
  }
  for (int k = -8; k <= 8; ++k) {
    LP f = z(k);
    EXPECT_EQ(jacobi_join(jac_Y_matrix_apply(jacobi_split(f), p)), jac_Y_apply(f, p)) << "k=" << k;
  }
}

TEST(JacEigen, BothRoutes) {
  JP p = canonical_jac();
  for (int n = -6; n <= 6; ++n)
    for (JacRoute route : {JacRoute::Scalar, JacRoute::Matrix})
      for (const LP& r : jac_eigen_residual(n, p, route)) EXPECT_TRUE(r.is_zero()) << "n=" << n;
}

TEST(JacEigen, MutationIsDetected) {
  JP p = canonical_jac();
  bool scalar_hit = false, matrix_hit = false;
  for (int n = -3; n <= 3; ++n) {
    for (const LP& r : jac_eigen_residual(n, p, JacRoute::Scalar, Mutation::JacobiAlphaBetaSign))
      scalar_hit |= !r.is_zero();
    for (const LP& r : jac_eigen_residual(n, p, JacRoute::Matrix, Mutation::JacobiAlphaBetaSign))
      matrix_hit |= !r.is_zero();
  }
  EXPECT_TRUE(scalar_hit);
  EXPECT_TRUE(matrix_hit);
  // invisible when alpha = beta
  JP sym(R("1/2"), R("1/2"));
  for (const LP& r : jac_eigen_residual(-2, sym, JacRoute::Scalar, Mutation::JacobiAlphaBetaSign))
    EXPECT_TRUE(r.is_zero());
}

TEST(JacShiftTable, LoweringAndRaising) {
  JP p = canonical_jac();
  for (const ShiftEntry<Rational>& e : jac_shift_table(6, p)) {
    EXPECT_TRUE(e.lowering_exact) << "n=" << e.n;
    EXPECT_TRUE(e.raising_exact) << "n=" << e.n;
    EXPECT_EQ(e.lowering, R(e.n));
    EXPECT_EQ(e.raising, Rational(e.n + p.s()));
  }
}

TEST(JacBilinear, Examples) {
  JP p = canonical_jac();
  EXPECT_EQ(jac_bilinear(LP(R(1)), LP(R(1)), p), R(1));
  EXPECT_EQ(jac_bilinear(jac_E_laurent(2, p), jac_E_laurent(-2, p), p), R(0));
  EXPECT_GT(jac_bilinear_constant(p), 0);
  EXPECT_GT(jac_bilinear_constant(JP(R("-9/10"), R("-1/2"))), 0);
  GramReport<Rational> g = jac_gram_report(5, p);
  EXPECT_TRUE(g.diagonal());
  EXPECT_TRUE(g.positive_diagonal());
  // the component norms fix the diagonal
  for (int n = 1; n <= 5; ++n) {
    Rational neg = jac_norm(n, p) + jac_bilinear_constant(p) * jac_norm(n - 1, p.shifted());
    EXPECT_EQ(g.at(-n, -n), neg);
  }
}

TEST(JacCircle, Orthogonality) {
  JP p = canonical_jac();
  for (auto [m, n] : {std::pair{1, -1}, std::pair{2, 1}}) {
    CircleResult r = circle_orthogonality(m, n, p, 2048);
    EXPECT_LT(r.residual, 1e-8) << m << "," << n;
  }
  CircleResult d = circle_orthogonality(0, 0, p, 2048);
  EXPECT_GT(d.integral.real(), 0);
  EXPECT_LT(d.residual, 1e-8);
  EXPECT_NEAR(d.fitted_constant, jac_circle_constant(0.5, 1.0 / 3), 1e-7);
  EXPECT_NEAR(jac_circle_constant_printed(0.5, 1.0 / 3) / d.fitted_constant, 2.0, 1e-7);
  CircleResult e = circle_orthogonality(-2, -2, p, 2048);
  EXPECT_LT(e.residual, 1e-8);
}

TEST(JacCircle, IntervalFormAgrees) {
  JP p = canonical_jac();
  const double c = std::exp2(2 * 0.5 + 2.0 / 3 + 3);
  for (auto [m, n] : {std::pair{0, 0}, std::pair{-1, -1}, std::pair{2, 2}, std::pair{1, -1}}) {
    std::complex<double> I = circle_integral(m, n, p, 2048), J = interval_integral(m, n, p, 1024);
    double scale = std::sqrt(circle_integral(m, m, p, 2048).real() * circle_integral(n, n, p, 2048).real());
    // two independent quadratures, each accurate to about 1e-8
    EXPECT_LT(std::abs(I / c - J) * c / scale, 1e-7) << m << "," << n;
  }
}

TEST(JacCircle, WeightedIntegrandNonnegative) {
  JP p = canonical_jac();
  LP E = jac_E_laurent(3, p);
  for (double t : detail::circle_nodes(256, false)) {
    std::complex<double> zz = std::polar(1.0, t);
    double w = std::pow(std::abs(1.0 - zz), 2.0) * std::pow(std::abs(1.0 + zz), 5.0 / 3);
    EXPECT_GE(std::norm(eval_complex(E, zz)) * w, 0.0);
  }
}

TEST(JacCircle, SingularWeightUsesShiftedNodes) {
  JP p(R("-3/4"), R("1/2"));
  EXPECT_TRUE(std::isfinite(circle_integral(1, -1, p, 512).real()));
  EXPECT_THROW(circle_orthogonality(1, -1, JP(R(-2), R(0)), 64), InvalidParameters);
}

TEST(JacLimits, FromAW) {
  JP p = canonical_jac();
  LimitReport r = jac_limit_check(JacobiLimitKind::FromAW, 2, p, 16);
  EXPECT_LT(r.final_error(), 1e-4);
  EXPECT_TRUE(r.monotone_tail());
  LimitReport zero = jac_limit_check(JacobiLimitKind::FromAW, 0, p, 8);
  for (const LimitSample& s : zero.samples) EXPECT_EQ(s.error, 0.0);
  LimitReport e = jac_limit_check(JacobiLimitKind::FromAWNonsym, -2, p, 16);
  EXPECT_TRUE(e.passed()) << e.final_error();
  LimitReport e2 = jac_limit_check(JacobiLimitKind::FromAWNonsym, 2, p, 16);
  EXPECT_TRUE(e2.passed()) << e2.final_error();
}

TEST(JacLimits, FromLQJ) {
  JP p = canonical_jac();
  for (int n = 1; n <= 3; ++n) {
    LimitReport r = jac_limit_check(JacobiLimitKind::FromLQJ, n, p, 16);
    EXPECT_TRUE(r.passed()) << "n=" << n << " err=" << r.final_error();
  }
  EXPECT_THROW(jac_limit_check(JacobiLimitKind::FromLQJ, 1, p, 0), ConfigError);
}

TEST(JacBranchEval, MatchesDirectEvaluation) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xd(-0.99, 0.99);
  for (int trial = 0; trial < 20; ++trial) {
    VecSymPair<Rational> v{random_sym(rng, 3), random_sym(rng, 2)};
    for (int i = 0; i < 5; ++i) {
      double x = xd(rng);
      EXPECT_LT(branch_eval_residual(v, x, 1), 1e-12);
      EXPECT_LT(branch_eval_residual(v, x, -1), 1e-12);
    }
  }
}

class JacProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(JacProperty, EigenGramAndRelation) {
  std::mt19937 rng(GetParam());
  JP p = random_jac(rng);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(jac_poly(n, p), jac_poly(n, p, JacMethod::Recurrence));
    EXPECT_TRUE(jac_relation_residual(n, p).is_zero());
  }
  for (int n = -4; n <= 4; ++n)
    for (const LP& r : jac_eigen_residual(n, p, JacRoute::Matrix)) EXPECT_TRUE(r.is_zero());
  GramReport<Rational> g = jac_gram_report(3, p);
  EXPECT_TRUE(g.diagonal());
  EXPECT_TRUE(g.positive_diagonal());
}

TEST_P(JacProperty, SplitConjugation) {
  std::mt19937 rng(GetParam());
  JP p = random_jac(rng);
  LP f = random_laurent(rng, -4, 4);
  EXPECT_EQ(jacobi_join(jac_Y_matrix_apply(jacobi_split(f), p)), jac_Y_apply(f, p));
  LP g = random_laurent(rng, -3, 3);
  EXPECT_EQ(jac_bilinear(f, g, p), jac_bilinear(g, f, p));
}

INSTANTIATE_TEST_SUITE_P(Seeds, JacProperty, ::testing::Range(1u, 21u));
