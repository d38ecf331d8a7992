#include <gtest/gtest.h>

#include <random>

#include "awvec/laurent.hpp"
#include "awvec/vector_form.hpp"
#include "support.hpp"

using namespace awvec;
using namespace awvec::testing;

TEST(Eval, Examples) {
  EXPECT_EQ((z(1) + z(-1)).eval(R(2)), R("5/2"));
  EXPECT_EQ(LP(1).eval(R("7/3")), R(1));
  EXPECT_EQ((z(3) - z(-1, R(2))).eval(R("1/2")), R("-31/8"));
}

TEST(Eval, ZeroPoint) {
  EXPECT_THROW((z(1) + z(-1)).eval(R(0)), ZeroPoint);
  EXPECT_EQ((z(2) + LP(3)).eval(R(0)), R(3));
}

TEST(Substitute, Examples) {
  EXPECT_EQ(substitute(z(1), Substitution::QShift, R("1/2")), z(1, R("1/2")));
  EXPECT_EQ(substitute(z(1) + z(-1), Substitution::Reflect, R("1/2")), z(1) + z(-1));
  EXPECT_EQ(substitute(z(2), Substitution::QReflect, R("1/3")), z(-2, R("1/9")));
  EXPECT_EQ(substitute(z(3), Substitution::QInverseReflect, R("1/2")), z(-3, R(8)));
  EXPECT_THROW(substitute(z(1), Substitution::QShift, R(0)), InvalidParameters);
}

TEST(ExactDivide, Examples) {
  EXPECT_EQ(exact_divide(LP(1) - z(2), LP(1) - z(1)), LP(1) + z(1));
  EXPECT_EQ(exact_divide(z(-1) - z(1), LP(1) - z(2)), z(-1));
  EXPECT_THROW(exact_divide(LP(1) + z(1), LP(1) - z(1)), DivisionNotExact);
  EXPECT_THROW(exact_divide(z(1), LP()), DivisionNotExact);
}

TEST(SymDecompose, Examples) {
  const Rational a = R("1/2"), b = R("1/3");
  VecSymPair<Rational> one = sym_decompose_ab(LP(1), a, b);
  EXPECT_EQ(one.f1, SP(R(1)));
  EXPECT_TRUE(one.f2.is_zero());

  VecSymPair<Rational> v = sym_decompose_ab(z(1), a, b);
  const Rational s = R("5/6");
  EXPECT_EQ(v.f1.laurent(), (z(1) + z(-1) - LP(s)) / s);
  EXPECT_EQ(v.f2.laurent(), LP(Rational(-1) / s));

  VecSymPair<Rational> pure = sym_decompose_ab(ab_multiplier(a, b), a, b);
  EXPECT_TRUE(pure.f1.is_zero());
  EXPECT_EQ(pure.f2, SP(R(1)));
}

TEST(SymDecompose, Degenerate) { EXPECT_THROW(sym_decompose_ab(z(1), R(2), R("1/2")), DegenerateParameters); }

TEST(SymRecompose, Examples) {
  const Rational a = R("1/2"), b = R("1/3");
  EXPECT_EQ(sym_recompose_ab(VecSymPair<Rational>{SP(R(1)), SP()}, a, b), LP(1));
  EXPECT_EQ(sym_recompose_ab(VecSymPair<Rational>{SP(), SP(R(1))}, a, b), z(-1) - LP(R("5/6")) + z(1, R("1/6")));
  LP f = z(3) + z(1, R(2));
  EXPECT_EQ(sym_recompose_ab(sym_decompose_ab(f, a, b), a, b), f);
}

TEST(JacobiSplit, Examples) {
  VecSymPair<Rational> v = jacobi_split(z(1) + z(-1));
  EXPECT_EQ(v.f1.laurent(), z(1) + z(-1));
  EXPECT_TRUE(v.f2.is_zero());

  v = jacobi_split(z(1));
  EXPECT_EQ(v.f1.laurent(), (z(1) + z(-1)) / R(2));
  EXPECT_EQ(v.f2, SP(R("-1/2")));
  EXPECT_EQ(jacobi_join(v), z(1));

  v = jacobi_split(z(1) - z(-1));
  EXPECT_TRUE(v.f1.is_zero());
  EXPECT_EQ(v.f2, SP(R(-1)));
}

TEST(XForm, Examples) {
  EXPECT_EQ(to_x(SP(z(1) + z(-1))), OP::monomial(1, R(2)));
  EXPECT_EQ(to_x(SP(z(2) + z(-2))), OP::monomial(2, R(4)) - OP(R(2)));
  EXPECT_EQ(to_x(SP(R(1))), OP(R(1)));
  EXPECT_THROW(to_x(z(1)), NotSymmetric);
  EXPECT_EQ(from_x(OP::monomial(2, R(4)) - OP(R(2))).laurent(), z(2) + z(-2));
}

TEST(SymLaurent, ChecksInvariant) {
  EXPECT_THROW(SP(z(1)), NotSymmetric);
  EXPECT_EQ(SP::sym_monomial(2).laurent(), z(2) + z(-2));
  EXPECT_EQ(SP::sym_monomial(0), SP(R(1)));
}

TEST(Printing, Laurent) {
  EXPECT_EQ(to_string(z(3) - z(-1, R(2))), "z^3 - 2*z^-1");
  EXPECT_EQ(to_string(LP()), "0");
  EXPECT_EQ(to_string(OP::monomial(2, R(4)) - OP(R(2))), "4*x^2 - 2");
}

TEST(ParseRational, StrictForms) {
  EXPECT_EQ(parse_rational("-3/6"), R(-1) / 2);
  EXPECT_EQ(parse_rational("+7"), R(7));
  EXPECT_THROW(parse_rational("0.5"), ConfigError);
  EXPECT_THROW(parse_rational("1/0"), ConfigError);
  EXPECT_THROW(parse_rational("1e3"), ConfigError);
  EXPECT_THROW(parse_rational(""), ConfigError);
}

TEST(Ipow, NegativeExponents) {
  EXPECT_EQ(ipow(R("2/3"), -2), R("9/4"));
  EXPECT_EQ(ipow(R(5), 0), R(1));
  EXPECT_THROW(ipow(R(0), -1), ZeroPoint);
}

// Properties on random inputs.

class CoreProperty : public ::testing::TestWithParam<unsigned> {};

TEST_P(CoreProperty, RingAndSubstitutionHomomorphism) {
  std::mt19937 rng(GetParam());
  LP f = random_laurent(rng, -3, 4), g = random_laurent(rng, -2, 2), h = random_laurent(rng, -1, 3);
  EXPECT_EQ(f * g, g * f);
  EXPECT_EQ((f * g) * h, f * (g * h));
  EXPECT_EQ(f * (g + h), f * g + f * h);
  const Rational q = R("2/7");
  for (Substitution s : {Substitution::QShift, Substitution::QInverseShift, Substitution::Reflect,
                         Substitution::QReflect, Substitution::QInverseReflect})
    EXPECT_EQ(substitute(f * g, s, q), substitute(f, s, q) * substitute(g, s, q));
  EXPECT_EQ(substitute(substitute(f, Substitution::Reflect, q), Substitution::Reflect, q), f);
  EXPECT_EQ(substitute(substitute(f, Substitution::QShift, q), Substitution::QInverseShift, q), f);
}

TEST_P(CoreProperty, ExactDivideInvertsProduct) {
  std::mt19937 rng(GetParam());
  LP f = random_laurent(rng, -3, 3), g = random_laurent(rng, -2, 3);
  if (g.is_zero()) g = LP(1);
  EXPECT_EQ(exact_divide(f * g, g), f);
}

TEST_P(CoreProperty, DecompositionRoundTrips) {
  std::mt19937 rng(GetParam());
  Rational a = small_rational(rng), b = small_rational(rng);
  LP f = random_laurent(rng, -4, 5);
  VecSymPair<Rational> v = sym_decompose_ab(f, a, b);
  EXPECT_EQ(sym_recompose_ab(v, a, b), f);
  VecSymPair<Rational> w{random_sym(rng, 3), random_sym(rng, 2)};
  EXPECT_EQ(sym_decompose_ab(sym_recompose_ab(w, a, b), a, b), w);
  EXPECT_EQ(jacobi_join(jacobi_split(f)), f);
  EXPECT_EQ(jacobi_split(jacobi_join(w)), w);
}

TEST_P(CoreProperty, XFormRoundTripsAndKeepsDegree) {
  std::mt19937 rng(GetParam());
  SP f = random_sym(rng, 6);
  OP p = to_x(f);
  EXPECT_EQ(from_x(p), f);
  EXPECT_EQ(p.degree(), f.degree());
}

INSTANTIATE_TEST_SUITE_P(Seeds, CoreProperty, ::testing::Range(1u, 41u));
