#include "logitgof/logistic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace logitgof;

TEST(LogisticCdf, KnownValues) {
  EXPECT_DOUBLE_EQ(logistic::cdf(0.0), 0.5);
  EXPECT_NEAR(logistic::cdf(std::log(3.0)), 0.75, 1e-15);
}

TEST(LogisticCdf, Symmetry) {
  const double x = 1.7;
  EXPECT_NEAR(logistic::cdf(-x), 1.0 - logistic::cdf(x), 1e-15);
}

TEST(LogisticCdf, ExtremeArgumentsDoNotOverflow) {
  EXPECT_EQ(logistic::cdf(800.0), 1.0);
  EXPECT_EQ(logistic::cdf(-800.0), 0.0);
  EXPECT_GT(logistic::cdf(-700.0), 0.0);
  EXPECT_EQ(logistic::pdf(-800.0), 0.0);
  EXPECT_FALSE(std::isnan(logistic::pdf(800.0)));
}

TEST(LogisticCdf, RejectsNonFinite) {
  EXPECT_THROW(logistic::cdf(std::numeric_limits<double>::infinity()), std::domain_error);
  EXPECT_THROW(logistic::cdf(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
  EXPECT_THROW(logistic::pdf(-std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST(LogisticCdf, StrictlyIncreasing) {
  double prev = logistic::cdf(-30.0);
  for (double x = -29.9; x <= 30.0; x += 0.1) {
    const double c = logistic::cdf(x);
    ASSERT_GT(c, prev) << x;
    ASSERT_GT(c, 0.0);
    ASSERT_LT(c, 1.0);
    prev = c;
  }
}

TEST(LogisticPdf, KnownValuesAndParity) {
  EXPECT_DOUBLE_EQ(logistic::pdf(0.0), 0.25);
  EXPECT_DOUBLE_EQ(logistic::pdf(2.3), logistic::pdf(-2.3));
}

TEST(LogisticPdf, IntegratesToOne) {
  const double mass = oracle::integrate([](double x) { return logistic::pdf(x); }, -30.0, 30.0);
  EXPECT_NEAR(mass, 1.0, 1e-10);
}

TEST(LogisticPdf, EqualsCdfTimesComplementProperty) {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> xs(-40.0, 40.0);
  for (int i = 0; i < 10000; ++i) {
    const double x = xs(gen);
    const double c = logistic::cdf(x);
    const double p = logistic::pdf(x);
    ASSERT_LE(std::abs(p - c * (1.0 - c)), 1e-15 * std::max(1.0, p)) << x;
  }
}

TEST(LogisticQuantile, KnownValues) {
  EXPECT_EQ(logistic::quantile(0.5), 0.0);
  EXPECT_NEAR(logistic::quantile(0.75), std::log(3.0), 1e-15);
  EXPECT_NEAR(logistic::quantile(0.75), 1.098612, 1e-6);
}

TEST(LogisticQuantile, RoundTrip) {
  EXPECT_NEAR(logistic::quantile(logistic::cdf(-4.2)), -4.2, 1e-12);
}

TEST(LogisticQuantile, RejectsOutsideOpenUnitInterval) {
  EXPECT_THROW(logistic::quantile(0.0), std::domain_error);
  EXPECT_THROW(logistic::quantile(1.0), std::domain_error);
  EXPECT_THROW(logistic::quantile(-0.1), std::domain_error);
  EXPECT_THROW(logistic::quantile(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST(LogisticQuantile, InverseAndSymmetryProperty) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> us(1e-3, 1.0 - 1e-3);
  for (int i = 0; i < 10000; ++i) {
    const double u = us(gen);
    ASSERT_LE(std::abs(logistic::cdf(logistic::quantile(u)) - u), 1e-12) << u;
    ASSERT_LE(std::abs(logistic::quantile(u) + logistic::quantile(1.0 - u)), 1e-12) << u;
  }
}

TEST(Weight, KnownValuesAndSymmetry) {
  EXPECT_DOUBLE_EQ(logistic::weight(0.5), 1.5);
  EXPECT_NEAR(logistic::weight(0.1), logistic::weight(0.9), 1e-15);
  EXPECT_THROW(logistic::weight(0.0), std::domain_error);
  EXPECT_THROW(logistic::weight(1.0), std::domain_error);
}

TEST(Weight, IntegratesToOne) {
  auto primitive = [](double t) { return 3.0 * t * t - 2.0 * t * t * t; };
  EXPECT_NEAR(primitive(1.0) - primitive(0.0), 1.0, 1e-12);
  const double q = oracle::integrate([](double t) { return logistic::weight(t); }, 1e-300, 1.0 - 1e-16);
  EXPECT_NEAR(q, 1.0, 1e-10);
}

TEST(WeightedMoments, ClosedFormValues) {
  const auto m = logistic::weighted_moments();
  EXPECT_EQ(m.mu1, 0.0);
  EXPECT_DOUBLE_EQ(m.mu2, std::numbers::pi * std::numbers::pi / 3.0 - 2.0);
  EXPECT_DOUBLE_EQ(m.nu, m.mu2);
  EXPECT_NEAR(m.mu2, 1.2898681, 1e-7);
  EXPECT_GT(m.nu, 0.0);
}

TEST(WeightedMoments, MatchQuadrature) {
  const auto m = logistic::weighted_moments();
  const double mu1 = oracle::integrate_singular(
      [](double t) { return oracle::weight(t) * oracle::logit(t); }, 0.0, 1.0);
  const double mu2 = oracle::integrate_singular(
      [](double t) { return oracle::weight(t) * oracle::logit(t) * oracle::logit(t); }, 0.0, 1.0);
  EXPECT_NEAR(mu1, m.mu1, 1e-10);
  EXPECT_NEAR(mu2, m.mu2, 1e-8);
}
