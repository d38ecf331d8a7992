#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "awvec/bessel.hpp"
#include "support.hpp"

using namespace awvec;
using namespace awvec::testing;

namespace {

using PS = PowerSeries<Rational>;

const std::vector<int> kNs{8, 16, 32, 64, 128, 256, 512, 1024};

}  // namespace

TEST(PowerSeries, Arithmetic) {
  PS s(4);
  s[1] = R(2);
  s[3] = R(-1);
  EXPECT_EQ(s.derivative().order(), 3);
  EXPECT_EQ(s.derivative()[0], R(2));
  EXPECT_EQ(s.derivative()[2], R(-3));
  EXPECT_EQ(s.divide_by_x()[0], R(2));
  EXPECT_EQ(s.times_x()[4], R(-1));
  EXPECT_EQ(s.reflect()[1], R(-2));
  EXPECT_TRUE((s + s.reflect()).is_zero());
  PS c(2);
  c[0] = R(1);
  EXPECT_THROW(c.divide_by_x(), DivisionNotExact);
  EXPECT_EQ((s + c).order(), 2);
}

TEST(BesselSeries, Examples) {
  PS J = bessel_series(R("1/2"), R("2/3"), 10);
  EXPECT_EQ(J[0], R(1));
  EXPECT_EQ(J.order(), 10);
  for (int k = 1; k <= 10; k += 2) EXPECT_EQ(J[k], R(0));
  // x^2: -(lambda^2/4) / (alpha+1)
  EXPECT_EQ(J[2], Rational(-(R(4) / 9) / 4 / R("3/2")));
  EXPECT_THROW(bessel_series(R(-3), R(1), 10), PoleAtNegativeInteger);
  EXPECT_NO_THROW(bessel_series(R(-3), R(1), 2));
}

TEST(BesselValue, CosAndSinc) {
  for (int i = 0; i <= 100; ++i) {
    long double t = i / 10.0L;
    SeriesValue c = bessel_value(-0.5L, t, 60);
    EXPECT_NEAR(static_cast<double>(c.value), std::cos(static_cast<double>(t)), 1e-12) << t;
    EXPECT_LT(c.bound, 1e-12L);
    long double sinc = t == 0 ? 1 : std::sin(t) / t;
    EXPECT_NEAR(static_cast<double>(bessel_value(0.5L, t, 60).value), static_cast<double>(sinc), 1e-12) << t;
  }
  EXPECT_EQ(bessel_value(2.0L, 0).value, 1.0L);
}

TEST(NonsymBessel, Examples) {
  NonsymBesselPair<Rational> E = nonsym_bessel(R("-1/2"), R(1), 30);
  for (long double x : {0.0L, 0.3L, 1.7L, 4.0L}) {
    EXPECT_NEAR(static_cast<double>(E.even.eval(x)), std::cos(static_cast<double>(x)), 1e-12);
    EXPECT_NEAR(static_cast<double>(E.odd.eval(x)), std::sin(static_cast<double>(x)), 1e-12);
  }
  EXPECT_EQ(E.odd[0], R(0));
  NonsymBesselPair<Rational> a = nonsym_bessel(R("3/2"), R("2/3"), 20), b = nonsym_bessel(R("3/2"), R("-2/3"), 20);
  EXPECT_EQ(a.even, b.even);
  EXPECT_EQ(a.odd, -b.odd);
  EXPECT_THROW(nonsym_bessel(R(-1), R(1), 10), PoleAtNegativeInteger);
  std::complex<long double> e = nonsym_bessel_value(-0.5L, 1.3L);
  EXPECT_NEAR(static_cast<double>(e.real()), std::cos(1.3), 1e-15);
  EXPECT_NEAR(static_cast<double>(e.imag()), std::sin(1.3), 1e-15);
}

TEST(Dunkl, EigenResidualVanishes) {
  for (auto [al, la, K] : {std::tuple{"-1/2", "1", 20}, std::tuple{"1/2", "2/3", 30}, std::tuple{"3/2", "1", 32}}) {
    auto [re, im] = dunkl_eigen_residual(R(al), R(la), K);
    EXPECT_EQ(re.order(), K - 1);
    EXPECT_TRUE(re.is_zero()) << al;
    EXPECT_TRUE(im.is_zero()) << al;
  }
}

TEST(Dunkl, MutationShowsAtOrderOne) {
  auto [re, im] = dunkl_eigen_residual(R("1/2"), R("2/3"), 30, Mutation::BesselOddSign);
  EXPECT_EQ(re.first_nonzero(), 1);
  EXPECT_FALSE(im.is_zero());
}

TEST(VectorEigen, Examples) {
  auto [first, second] = vector_eigen_check(R("1/2"), R(1), 24);
  EXPECT_TRUE(first.is_zero());
  EXPECT_TRUE(second.is_zero());
  EXPECT_EQ(second.order(), 22);
  // x^-1 d/dx on an even series: the derivative has no constant term
  EXPECT_EQ(bessel_series(R("1/2"), R(1), 24).derivative()[0], R(0));
  auto [m1, m2] = vector_eigen_check(R("1/2"), R(1), 24, Mutation::BesselOddSign);
  EXPECT_FALSE(m1.is_zero() && m2.is_zero());
}

TEST(VectorEigen, MatchesScalarForm) {
  // With o = x w: real residual = x * second, imaginary residual = first.
  const Rational al = R("3/2"), la = R("2/5");
  const int K = 30;
  auto [re, im] = dunkl_eigen_residual(al, la, K, Mutation::BesselOddSign);
  auto [first, second] = vector_eigen_check(al, la, K, Mutation::BesselOddSign);
  EXPECT_EQ(re.truncate(K - 2), second.times_x().truncate(K - 2));
  EXPECT_EQ(im.truncate(K - 2), first.truncate(K - 2));
  EXPECT_FALSE(re.is_zero());
}

TEST(BesselLimit, SymmetricAndNonsymmetric) {
  BesselLimitReport r = bessel_limit_check(R("1/2"), R("1/3"), R(1), 1.0, kNs);
  EXPECT_TRUE(r.symmetric.passed()) << r.symmetric.final_error();
  EXPECT_LT(r.symmetric.final_error(), 1e-3);
  EXPECT_NEAR(r.symmetric.final_order(), 1.0, 0.05);
  for (const LimitReport* l : r.all()) EXPECT_TRUE(l->passed()) << l->name << " " << l->final_error();
  EXPECT_TRUE(r.passed());
}

TEST(BesselLimit, XZeroRatioTendsToOne) {
  BesselLimitReport r = bessel_limit_check(R("1/2"), R("1/3"), R(1), 0.0, kNs);
  for (std::size_t i = 1; i < r.x0_values.size(); ++i)
    EXPECT_LT(std::abs(r.x0_values[i] - 1), std::abs(r.x0_values[i - 1] - 1));
  EXPECT_NEAR(r.x0_values.back(), 1.0, 1e-3);
  EXPECT_GT(bessel_exact_x0_constant(1024, 0.5, 1.0 / 3), 0);
}

TEST(BesselLimit, PrintedPairingFails) {
  // E_{+n} on the + branch goes to E_alpha(-lambda x), not E_alpha(+lambda x).
  std::complex<long double> v = scaled_jacobi_E(1024, 0.5L, 1.0L / 3, 1.0L, 1);
  std::complex<long double> plus = nonsym_bessel_value(0.5L, 1.0L), minus = nonsym_bessel_value(0.5L, -1.0L);
  EXPECT_GT(std::abs(v - plus) / std::abs(plus), 0.1L);
  EXPECT_LT(std::abs(v - minus) / std::abs(minus), 1e-3L);
}

TEST(BesselLimit, MutationBreaksNonsymmetricLimit) {
  BesselLimitReport r = bessel_limit_check(R("1/2"), R("1/3"), R(1), 1.0, kNs, 1e-3, Mutation::BesselOddSign);
  EXPECT_TRUE(r.symmetric.passed());
  EXPECT_FALSE(r.passed());
}

TEST(BesselLimit, Errors) {
  EXPECT_THROW(bessel_limit_check(R(-1), R(0), R(1), 1.0, kNs), InvalidParameters);
  EXPECT_THROW(bessel_limit_check(R(0), R(0), R(1), 1.0, {}), ConfigError);
}

class BesselProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(BesselProperty, DunklResidualExact) {
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<int> num(-4, 12), den(2, 7);
  Rational al(num(rng), den(rng)), la(num(rng) + 13, den(rng));
  al.canonicalize();
  la.canonicalize();
  if (al <= -1) al += 2;
  auto [re, im] = dunkl_eigen_residual(al, la, 26);
  EXPECT_TRUE(re.is_zero());
  EXPECT_TRUE(im.is_zero());
  auto [first, second] = vector_eigen_check(al, la, 26);
  EXPECT_TRUE(first.is_zero());
  EXPECT_TRUE(second.is_zero());
}

TEST_P(BesselProperty, BesselOdeOrderByOrder) {
  // J'' + (2 alpha + 1)/x J' = -lambda^2 J coefficientwise.
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<int> num(0, 9), den(2, 5);
  Rational al(num(rng), den(rng)), la(num(rng) + 1, den(rng));
  al.canonicalize();
  la.canonicalize();
  PS J = bessel_series(al, la, 24);
  PS lhs = J.derivative().derivative() + Rational(2 * al + 1) * J.derivative().divide_by_x();
  PS rhs = Rational(-la * la) * J.truncate(22);
  EXPECT_EQ(lhs, rhs);
}

INSTANTIATE_TEST_SUITE_P(Seeds, BesselProperty, ::testing::Range(1u, 21u));
