#include <gtest/gtest.h>

#include "sqfree/errors.hpp"
#include "sqfree/instances.hpp"
#include "sqfree/polynomial.hpp"
#include "support.hpp"

namespace sqfree {
namespace {

using testing::P;
using testing::Q;

// f = (x^2 + 2x + 3)(x - 1)^2 and its square-free part.
const QPolynomial kF = P("x^4 - 4x + 3");
const QPolynomial kF0 = P("x^3 + x^2 + x - 3");

TEST(Degree, ZeroPolynomialIsMinusInfinity) {
  const QPolynomial zero;
  EXPECT_TRUE(zero.degree().is_minus_infinity());
  EXPECT_THROW(static_cast<void>(zero.degree().value()), std::logic_error);
  EXPECT_LT(zero.degree(), QPolynomial::one().degree());
  EXPECT_EQ(QPolynomial::one().degree(), 0u);
  EXPECT_EQ(kF.degree(), 4u);
  EXPECT_EQ(QPolynomial({Q(1), Q(0), Q(0)}).degree(), 0u);
}

TEST(Polynomial, Add) {
  EXPECT_EQ(P("x - 1") + QPolynomial::one(), P("x"));
  EXPECT_EQ(kF + QPolynomial{}, kF);
  // coefficientwise: (3 - 1) + (2 + 1)x + x^2
  EXPECT_EQ(P("x^2 + 2x + 3") + P("x - 1"), QPolynomial({Q(2), Q(3), Q(1)}));
  EXPECT_TRUE((kF - kF).is_zero());
}

TEST(Polynomial, Multiply) {
  EXPECT_EQ(P("x^2 + 2x + 3") * P("x - 1") * P("x - 1"), kF);
  EXPECT_EQ(kF * QPolynomial::one(), kF);
  EXPECT_TRUE((kF * QPolynomial{}).is_zero());
  EXPECT_EQ(Q(0) * kF, QPolynomial{});
}

TEST(Polynomial, DivRem) {
  auto [q, r] = divrem(kF, P("x - 1"));
  EXPECT_EQ(q, kF0);
  EXPECT_TRUE(r.is_zero());

  auto [q1, r1] = divrem(kF, QPolynomial::one());
  EXPECT_EQ(q1, kF);
  EXPECT_TRUE(r1.is_zero());

  auto [q2, r2] = divrem(P("x^2 + 1"), P("x"));
  EXPECT_EQ(q2, P("x"));
  EXPECT_EQ(r2, QPolynomial::one());

  auto [q3, r3] = divrem(P("x"), P("x^2"));
  EXPECT_TRUE(q3.is_zero());
  EXPECT_EQ(r3, P("x"));

  EXPECT_THROW(divrem(kF, QPolynomial{}), DivisionByZeroError);
}

TEST(Polynomial, DivRemNonMonicDivisor) {
  auto [q, r] = divrem(P("x^3 + 1"), P("2x + 1"));
  EXPECT_EQ(q, P("1/2x^2 - 1/4x + 1/8"));
  EXPECT_EQ(r, P("7/8"));
}

TEST(Polynomial, ExactDiv) {
  EXPECT_EQ(exact_div(kF, P("x - 1")), kF0);
  EXPECT_EQ(exact_div(kF, kF), QPolynomial::one());
  EXPECT_EQ(exact_div(P("x^2 - 1"), P("x + 1")), P("x - 1"));
  EXPECT_THROW(exact_div(P("x^2 + 1"), P("x")), InexactDivisionError);
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(derivative(kF), P("4x^3 - 4"));
  EXPECT_TRUE(derivative(P("7/3")).is_zero());
  EXPECT_TRUE(derivative(QPolynomial{}).is_zero());
  EXPECT_EQ(derivative(kF0), P("3x^2 + 2x + 1"));
}

TEST(Polynomial, MakeMonic) {
  EXPECT_EQ(make_monic(P("4x^3 - 4")), P("x^3 - 1"));
  EXPECT_EQ(make_monic(kF), kF);
  EXPECT_EQ(make_monic(P("5")), QPolynomial::one());
  EXPECT_EQ(make_monic(P("-2x + 1")), P("x - 1/2"));
  EXPECT_THROW(make_monic(QPolynomial{}), ZeroPolynomialError);
}

TEST(Polynomial, Gcd) {
  EXPECT_EQ(gcd(kF, P("4x^3 - 4")), P("x - 1"));
  EXPECT_EQ(gcd(P("3x^2 + 6"), QPolynomial{}), P("x^2 + 2"));
  EXPECT_EQ(gcd(QPolynomial{}, P("-x + 2")), P("x - 2"));
  // X - 1 does not divide X^2 + 2X + 3 since the latter is 6 at X = 1.
  ASSERT_EQ(evaluate(P("x^2 + 2x + 3"), Q(1)), Q(6));
  EXPECT_EQ(gcd(P("x^2 + 2x + 3"), P("x - 1")), QPolynomial::one());
  EXPECT_THROW(gcd(QPolynomial{}, QPolynomial{}), ZeroPolynomialError);
}

TEST(Polynomial, ExtendedGcdGoldenExample) {
  const auto [g, u, v] = ext_gcd(P("3x^2 + 2x + 1"), kF0);
  EXPECT_EQ(g, QPolynomial::one());
  EXPECT_EQ(u, P("1/72x^2 + 1/9x + 1/24"));
  EXPECT_EQ(v, P("-1/24x - 23/72"));
}

TEST(Polynomial, ExtendedGcdEdgeCases) {
  {
    const auto [g, u, v] = ext_gcd(QPolynomial::one(), kF);
    EXPECT_EQ(g, QPolynomial::one());
    EXPECT_EQ(u, QPolynomial::one());
    EXPECT_TRUE(v.is_zero());
  }
  {
    // X*1 + X^2*0 = X; deg(u) = 0 < 2 - 1, deg(v) = -inf < 1 - 1.
    const auto [g, u, v] = ext_gcd(P("x"), P("x^2"));
    EXPECT_EQ(g, P("x"));
    EXPECT_EQ(u, QPolynomial::one());
    EXPECT_TRUE(v.is_zero());
  }
  {
    const auto [g, u, v] = ext_gcd(P("2x + 2"), QPolynomial{});
    EXPECT_EQ(g, P("x + 1"));
    EXPECT_EQ(u, P("1/2"));
    EXPECT_TRUE(v.is_zero());
  }
  {
    const auto [g, u, v] = ext_gcd(QPolynomial{}, P("3x"));
    EXPECT_EQ(g, P("x"));
    EXPECT_TRUE(u.is_zero());
    EXPECT_EQ(v, P("1/3"));
  }
  EXPECT_THROW(ext_gcd(QPolynomial{}, QPolynomial{}), ZeroPolynomialError);
}

TEST(Polynomial, Evaluate) {
  EXPECT_EQ(evaluate(kF, Q(1)), Q(0));
  EXPECT_EQ(evaluate(kF, Q(0)), Q(3));
  EXPECT_EQ(evaluate(P("1/6x^2 + 1/3x + 3/2"), Q(1)), Q(2));
  EXPECT_EQ(evaluate(QPolynomial{}, Q(5)), Q(0));
}

TEST(Polynomial, Coordinates) {
  const QVector v = coordinates(P("1/72x^2 + 1/9x + 1/24"), 3);
  ASSERT_EQ(v.size(), 3);
  EXPECT_EQ(v(0), Q(1, 24));
  EXPECT_EQ(v(2), Q(1, 72));
  EXPECT_EQ(from_coordinates(v), P("1/72x^2 + 1/9x + 1/24"));
  EXPECT_EQ(coordinates(QPolynomial{}, 2), QVector::Zero(2));
  EXPECT_THROW(coordinates(kF, 4), DegreeViolationError);
}

class PolynomialProperties : public ::testing::Test {
 protected:
  QPolynomial random(std::size_t max_degree = 8) {
    return gen_.random_polynomial(max_degree, CoefficientKind::rational, 9);
  }
  QPolynomial random_nonzero(std::size_t max_degree = 8) {
    for (;;) {
      auto p = random(max_degree);
      if (!p.is_zero()) return p;
    }
  }
  InstanceGenerator gen_{77};
};

TEST_F(PolynomialProperties, DivRemRoundTrip) {
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random(12), b = random_nonzero(6);
    const auto [q, r] = divrem(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST_F(PolynomialProperties, GcdDividesAndCommonFactorDividesGcd) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random(), b = random(), c = random_nonzero(4);
    if (a.is_zero() && b.is_zero()) continue;
    const auto ca = c * a, cb = c * b;
    const auto g = gcd(ca, cb);
    EXPECT_TRUE(g.is_monic());
    EXPECT_TRUE(divrem(ca, g).remainder.is_zero());
    EXPECT_TRUE(divrem(cb, g).remainder.is_zero());
    EXPECT_TRUE(divrem(g, make_monic(c)).remainder.is_zero());
  }
}

TEST_F(PolynomialProperties, ExtendedGcdIdentityAndDegreeBounds) {
  for (int trial = 0; trial < 200; ++trial) {
    auto a = random_nonzero(), b = random_nonzero();
    if (trial % 2 == 0) {
      const auto c = random_nonzero(3);  // force a nontrivial gcd
      a = a * c;
      b = b * c;
    }
    const auto [g, u, v] = ext_gcd(a, b);
    EXPECT_EQ(g, gcd(a, b));
    EXPECT_EQ(u * a + v * b, g);
    const std::size_t dg = g.degree().value();
    if (!u.is_zero()) EXPECT_LT(u.degree().value() + dg, b.degree().value());
    const bool associates = a.degree() == g.degree() && b.degree() == g.degree();
    if (associates) {
      EXPECT_TRUE(u.is_zero());
      EXPECT_TRUE(v.is_constant());
    } else if (!v.is_zero()) {
      EXPECT_LT(v.degree().value() + dg, a.degree().value());
    }
  }
}

TEST_F(PolynomialProperties, DerivativeIsLinearAndObeysProductRule) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random(), b = random();
    const Rational k = gen_.random_rational(CoefficientKind::rational, 9);
    EXPECT_EQ(derivative(a + k * b), derivative(a) + k * derivative(b));
    EXPECT_EQ(derivative(a * b), derivative(a) * b + a * derivative(b));
  }
}

TEST_F(PolynomialProperties, EvaluationIsARingHomomorphism) {
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random(), b = random();
    const Rational x = gen_.random_rational(CoefficientKind::rational, 5);
    EXPECT_EQ(evaluate(a * b, x), evaluate(a, x) * evaluate(b, x));
    EXPECT_EQ(evaluate(a + b, x), evaluate(a, x) + evaluate(b, x));
  }
}

}  // namespace
}  // namespace sqfree
