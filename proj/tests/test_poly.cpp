#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <variant>

#include <quartic/poly.hpp>

#include "support/test_oracles.hpp"

using namespace quartic;

TEST(RawCoefficients, RejectsNonFinite) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(RawCoefficients<double>(1, nan, 0, 0, 0), domain_error);
  EXPECT_THROW(RawCoefficients<double>(1, 0, 0, 0, -inf), domain_error);
  EXPECT_THROW(MonicQuartic<double>(0, inf, 0, 0), domain_error);
  EXPECT_NO_THROW(RawCoefficients<double>(1, 2, 3, 4, 5));
}

TEST(Normalize, AlreadyMonic) {
  const auto n = normalize(RawCoefficients<double>(1, -10, 35, -50, 24));
  ASSERT_TRUE(std::holds_alternative<MonicQuartic<double>>(n));
  EXPECT_EQ(std::get<MonicQuartic<double>>(n), MonicQuartic<double>(-10, 35, -50, 24));
}

TEST(Normalize, UniformScaling) {
  const auto n = normalize(RawCoefficients<double>(2, -20, 70, -100, 48));
  ASSERT_TRUE(std::holds_alternative<MonicQuartic<double>>(n));
  EXPECT_EQ(std::get<MonicQuartic<double>>(n), MonicQuartic<double>(-10, 35, -50, 24));
}

TEST(Normalize, ZeroLeadingDropsToCubic) {
  const auto n = normalize(RawCoefficients<double>(0, 1, 0, 0, -8));
  ASSERT_TRUE(std::holds_alternative<LowerDegreeProblem<double>>(n));
  const auto& lower = std::get<LowerDegreeProblem<double>>(n);
  EXPECT_EQ(lower.degree, 3);
  EXPECT_EQ(lower.coeffs[0], 0.0);
  EXPECT_EQ(lower.coeffs[1], 0.0);
  EXPECT_EQ(lower.coeffs[2], -8.0);
}

TEST(Normalize, NegligibleLeadingCoefficient) {
  // 1e-14 x^4 is below eps_lead relative to the trailing terms.
  const auto n = normalize(RawCoefficients<double>(1e-14, 0, 2, -4, 2));
  ASSERT_TRUE(std::holds_alternative<LowerDegreeProblem<double>>(n));
  const auto& lower = std::get<LowerDegreeProblem<double>>(n);
  EXPECT_EQ(lower.degree, 2);
  EXPECT_EQ(lower.coeffs[0], -2.0);
  EXPECT_EQ(lower.coeffs[1], 1.0);
}

TEST(Normalize, RecursesDownToLinearAndConstant) {
  const auto linear = std::get<LowerDegreeProblem<double>>(normalize(RawCoefficients<double>(0, 0, 0, 4, -2)));
  EXPECT_EQ(linear.degree, 1);
  EXPECT_EQ(linear.coeffs[0], -0.5);
  const auto constant = std::get<LowerDegreeProblem<double>>(normalize(RawCoefficients<double>(0, 0, 0, 0, 7)));
  EXPECT_EQ(constant.degree, 0);
}

TEST(Normalize, PureMonomialKeepsDegree) {
  const auto n = normalize(RawCoefficients<double>(1e-13, 0, 0, 0, 0));
  ASSERT_TRUE(std::holds_alternative<MonicQuartic<double>>(n));
  EXPECT_EQ(std::get<MonicQuartic<double>>(n), MonicQuartic<double>(0, 0, 0, 0));
}

TEST(Normalize, IdenticallyZero) {
  try {
    normalize(RawCoefficients<double>(0, 0, 0, 0, 0));
    FAIL() << "expected zero_polynomial_error";
  } catch (const zero_polynomial_error& e) {
    EXPECT_STREQ(e.what(), "identically zero polynomial");
  }
}

TEST(Normalize, RejectsNegativeEpsLead) {
  EXPECT_THROW(normalize(RawCoefficients<double>(1, 0, 0, 0, 1), -1.0), domain_error);
}

TEST(Evaluate, ConstructedRoot) {
  EXPECT_EQ(evaluate(MonicQuartic<double>(-10, 35, -50, 24), 1.0), 0.0);
}

TEST(Evaluate, PureQuartic) { EXPECT_EQ(evaluate(MonicQuartic<double>(0, 0, 0, 0), 3.0), 81.0); }

TEST(Evaluate, ExactIntegerValue) {
  // 256 - 704 + 656 - 244 + 30
  EXPECT_EQ(evaluate(MonicQuartic<double>(-11, 41, -61, 30), 4.0), -6.0);
}

TEST(Evaluate, RawAndLowerDegree) {
  EXPECT_EQ(evaluate(RawCoefficients<double>(2, -20, 70, -100, 48), 1.0), 0.0);
  LowerDegreeProblem<double> cubic{3, {0, 0, -8}};
  EXPECT_EQ(evaluate(cubic, 2.0), 0.0);
}

TEST(Residual, ExactRoots) {
  EXPECT_EQ(residual(MonicQuartic<double>(-10, 35, -50, 24), 2.0), 0.0);
  EXPECT_EQ(residual(MonicQuartic<double>(0, 0, 0, -1), 1.0), 0.0);
}

TEST(Residual, FirstOrderPerturbation) {
  // P'(1) = 4 for x^4 - 1, so P(1 + h) ~ 4h and the residual ~ 4h / 2.
  const double h = 1e-8;
  EXPECT_NEAR(residual(MonicQuartic<double>(0, 0, 0, -1), 1.0 + h), 2e-8, 1e-15);
}

TEST(PolyProperties, NormalizeIsScaleInvariant) {
  // Scaling by a power of two is exact, so normalize must return identical bits.
  // A general t rounds each t*c_k before the division; the quotient can then
  // move by up to 2u relative, plus half an ulp from each final rounding, so
  // the attainable bound is 3 ulps.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coeff(-100.0, 100.0);
  std::uniform_real_distribution<double> log_scale(-6.0, 6.0);
  std::uniform_int_distribution<int> exponent(-19, 19);
  std::bernoulli_distribution flip(0.5);
  for (int trial = 0; trial < 20000; ++trial) {
    RawCoefficients<double> raw(coeff(rng), coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    const double sign = flip(rng) ? -1.0 : 1.0;
    const double t = std::pow(10.0, log_scale(rng)) * sign;
    const double t2 = std::ldexp(sign, exponent(rng));
    const auto base = std::get<MonicQuartic<double>>(normalize(raw));
    const auto scaled = std::get<MonicQuartic<double>>(normalize(raw.scaled(t)));
    const auto scaled2 = std::get<MonicQuartic<double>>(normalize(raw.scaled(t2)));
    EXPECT_EQ(base, scaled2) << "trial " << trial;
    for (std::size_t k = 0; k < 4; ++k) {
      const double x = base.trailing()[k];
      const double y = scaled.trailing()[k];
      const double ulp = std::nextafter(std::abs(x), INFINITY) - std::abs(x);
      EXPECT_LE(std::abs(x - y), 3 * ulp) << "trial " << trial << " coefficient " << k;
    }
  }
}

TEST(PolyProperties, HornerMatchesCompensatedEvaluation) {
  // Rounding error measured in ulps of the term magnitude sum |c_k||x|^k;
  // relative to the value itself the error is unbounded near a root.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coeff(-1e6, 1e6);
  std::uniform_real_distribution<double> point(-1e3, 1e3);
  for (int trial = 0; trial < 20000; ++trial) {
    const MonicQuartic<double> m(coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    const double x = point(rng);
    const double fast = evaluate(m, x);
    const double careful =
        quartic_test::compensated_monic({m.a(), m.b(), m.c(), m.d()}, x);
    double magnitude = 1.0;
    for (double c : m.trailing()) magnitude = magnitude * std::abs(x) + std::abs(c);
    const double ulp = std::nextafter(magnitude, INFINITY) - magnitude;
    EXPECT_LE(std::abs(fast - careful), 4 * ulp) << "trial " << trial;
  }
}

TEST(PolyProperties, ResidualZeroIffValueZero) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> small(-5, 5);
  for (int trial = 0; trial < 2000; ++trial) {
    const MonicQuartic<double> m(small(rng), small(rng), small(rng), small(rng));
    const double x = small(rng);
    EXPECT_EQ(residual(m, x) == 0.0, evaluate(m, x) == 0.0);
  }
}
