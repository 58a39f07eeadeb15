#include <gtest/gtest.h>

#include <vector>

#include "dform/error.hpp"
#include "dform/polynomial.hpp"
#include "dform/rational_function.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dform {
namespace {

using testing::Gen;

constexpr std::size_t kDim = 3;

Polynomial x() { return Polynomial::variable(kDim, 0); }
Polynomial y() { return Polynomial::variable(kDim, 1); }
Polynomial z() { return Polynomial::variable(kDim, 2); }
Polynomial c(long v) { return Polynomial::constant(kDim, v); }
Rational q(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

std::vector<Rational> pt(long a, long b, long cc) { return {a, b, cc}; }

TEST(Polynomial, AddExamples) {
  EXPECT_TRUE((x() + (-x())).is_zero());
  EXPECT_EQ(x().pow(2) + y() + y(), x().pow(2) + y() * Rational(2));
  const Polynomial diff = x().pow(2) + (-(y().pow(2)));
  EXPECT_EQ(diff, x().pow(2) - y().pow(2));
  EXPECT_EQ(diff.size(), 2u);
}

TEST(Polynomial, MultiplyExamples) {
  EXPECT_EQ((x() + y()) * (x() - y()), x().pow(2) - y().pow(2));
  const Polynomial xy = x() * y();
  ASSERT_EQ(xy.size(), 1u);
  EXPECT_EQ(xy.leading().first, Monomial({1, 1, 0}));
  EXPECT_EQ(xy.leading().second, 1);
  EXPECT_TRUE((Polynomial(kDim) * (x() + c(3))).is_zero());
}

TEST(Polynomial, PartialExamples) {
  const Polynomial H = (x().pow(2) + y().pow(2) + z().pow(2)) * q(1, 2);
  EXPECT_EQ(partial(H, 0), x());
  EXPECT_TRUE(partial(x() * y(), 2).is_zero());
  EXPECT_EQ(partial(y() - y().pow(2) * q(1, 2), 1), c(1) - y());
}

TEST(Polynomial, EvalExamples) {
  EXPECT_EQ((x().pow(2) - y().pow(2)).eval(pt(3, 2, 1)), 5);
  EXPECT_EQ((x() * y()).eval(pt(2, 3, 0)), 6);
}

TEST(Polynomial, GrlexOrderIsGreatestFirst) {
  const Polynomial p = x() + y().pow(2) + c(1) + x() * z();
  std::vector<Monomial> order;
  for (const auto& [m, coef] : p.terms()) order.push_back(m);
  ASSERT_EQ(order.size(), 4u);
  EXPECT_EQ(order[0], Monomial({1, 0, 1}));
  EXPECT_EQ(order[1], Monomial({0, 2, 0}));
  EXPECT_EQ(order[2], Monomial({1, 0, 0}));
  EXPECT_EQ(order[3], Monomial({0, 0, 0}));
}

TEST(Polynomial, DimensionMismatchThrows) {
  EXPECT_THROW(x() + Polynomial::variable(2, 0), DimensionMismatch);
  EXPECT_THROW(x().eval(std::vector<Rational>{1, 2}), DimensionMismatch);
}

TEST(Polynomial, ExactQuotient) {
  const Polynomial a = x().pow(2) - y().pow(2);
  const auto quo = exact_quotient(a, x() - y());
  ASSERT_TRUE(quo.has_value());
  EXPECT_EQ(*quo, x() + y());
  EXPECT_FALSE(exact_quotient(a, x() + z()).has_value());
}

TEST(RationalFunction, Examples) {
  const Polynomial r2 = x().pow(2) + z().pow(2);
  EXPECT_TRUE((RationalFunction(z(), r2) + RationalFunction(-z(), r2)).is_zero());
  EXPECT_EQ(RationalFunction(c(1), x()) * RationalFunction(x()), RationalFunction(c(1)));
  const RationalFunction g(x(), r2);
  EXPECT_EQ(g.numerator(), x());
  EXPECT_EQ(g.denominator(), r2);
}

TEST(RationalFunction, EvalExamples) {
  const RationalFunction g(c(1), x().pow(2) + z().pow(2));
  EXPECT_EQ(g.eval(pt(1, 0, 1)), q(1, 2));
  EXPECT_THROW(g.eval(pt(0, 5, 0)), PoleAtPoint);
  EXPECT_TRUE(g.has_pole_at(pt(0, 1, 0)));
  EXPECT_THROW(RationalFunction(x(), Polynomial(kDim)), DivisionByZero);
}

TEST(RationalFunction, QuotientRuleExamples) {
  const Polynomial r2 = x().pow(2) + z().pow(2);
  const RationalFunction expected(z().pow(2) - x().pow(2), r2.pow(2));
  const RationalFunction fx(x(), r2);
  const RationalFunction fz(-z(), r2);
  EXPECT_EQ(partial(fx, 0), expected);
  EXPECT_TRUE(partial(fx, 1).is_zero());
  EXPECT_EQ(partial(fz, 2), expected);

  Gen gen(11);
  for (int i = 0; i < 20; ++i) {
    const auto p = gen.point(kDim);
    if (r2.eval(p) == 0) continue;
    EXPECT_EQ(partial(fx, 0).eval(p), testing::derivative_at(fx, 0, p));
    EXPECT_EQ(partial(fz, 2).eval(p), testing::derivative_at(fz, 2, p));
    EXPECT_EQ(expected.eval(p), testing::derivative_at(fx, 0, p));
  }
}

TEST(RationalFunction, AsPolynomialRejectsFractions) {
  EXPECT_THROW(RationalFunction(c(1), x()).as_polynomial(), NonPolynomialCoefficient);
  EXPECT_EQ(RationalFunction(x() * Rational(2), c(4)).as_polynomial(), x() * q(1, 2));
}

// Properties ------------------------------------------------------------

class CoeffProperties : public ::testing::TestWithParam<std::size_t> {};

TEST_P(CoeffProperties, RingAxioms) {
  const std::size_t n = GetParam();
  Gen gen(100 + n);
  for (int i = 0; i < 60; ++i) {
    const Polynomial a = gen.polynomial(n), b = gen.polynomial(n), d = gen.polynomial(n);
    EXPECT_EQ((a + b) + d, a + (b + d));
    EXPECT_EQ((a * b) * d, a * (b * d));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + d), a * b + a * d);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST_P(CoeffProperties, MixedPartialsCommute) {
  const std::size_t n = GetParam();
  Gen gen(200 + n);
  for (int t = 0; t < 30; ++t) {
    const Polynomial p = gen.polynomial(n);
    const RationalFunction f = gen.rational_function(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(partial(partial(p, i), j), partial(partial(p, j), i));
        EXPECT_EQ(partial(partial(f, i), j), partial(partial(f, j), i));
      }
    }
  }
}

TEST_P(CoeffProperties, LeibnizRule) {
  const std::size_t n = GetParam();
  Gen gen(300 + n);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = gen.polynomial(n), r = gen.polynomial(n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(partial(p * r, i), partial(p, i) * r + p * partial(r, i));
      EXPECT_EQ(partial(p, i), testing::oracle_partial(p, i));
    }
  }
}

TEST_P(CoeffProperties, EvalIsRingHomomorphism) {
  const std::size_t n = GetParam();
  Gen gen(400 + n);
  for (int t = 0; t < 40; ++t) {
    const Polynomial p = gen.polynomial(n), r = gen.polynomial(n);
    const auto pt = gen.point(n);
    EXPECT_EQ((p * r).eval(pt), p.eval(pt) * r.eval(pt));
    EXPECT_EQ((p + r).eval(pt), p.eval(pt) + r.eval(pt));
    const RationalFunction f = gen.rational_function(n), g = gen.rational_function(n);
    EXPECT_EQ((f * g).eval(pt), f.eval(pt) * g.eval(pt));
    EXPECT_EQ((f + g).eval(pt), f.eval(pt) + g.eval(pt));
  }
}

TEST_P(CoeffProperties, QuotientRuleMatchesPointDerivative) {
  const std::size_t n = GetParam();
  Gen gen(450 + n);
  for (int t = 0; t < 30; ++t) {
    const RationalFunction f = gen.rational_function(n);
    const auto pt = gen.point(n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(partial(f, i).eval(pt), testing::derivative_at(f, i, pt));
    }
  }
}

TEST_P(CoeffProperties, RationalEqualityIsEquivalence) {
  const std::size_t n = GetParam();
  Gen gen(500 + n);
  for (int t = 0; t < 40; ++t) {
    const RationalFunction a = gen.rational_function(n);
    const Polynomial s = gen.positive_polynomial(n);
    // the same value written over different denominators
    const RationalFunction b(a.numerator() * s, a.denominator() * s);
    const Polynomial s2 = gen.positive_polynomial(n);
    const RationalFunction d(a.numerator() * s2, a.denominator() * s2);
    EXPECT_EQ(a, a);
    EXPECT_EQ(a == b, b == a);
    EXPECT_TRUE(a == b && b == d && a == d);
    const RationalFunction other = gen.rational_function(n);
    const bool cross_zero = (a.numerator() * other.denominator() - other.numerator() * a.denominator()).is_zero();
    EXPECT_EQ(a == other, cross_zero);
  }
}

INSTANTIATE_TEST_SUITE_P(Dims, CoeffProperties, ::testing::Values(1, 2, 3, 4));

}  // namespace
}  // namespace dform
