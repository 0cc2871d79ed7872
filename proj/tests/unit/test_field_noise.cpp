#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "toricleak/field_noise.hpp"

using namespace toricleak;

namespace {

struct Row {
  double sigma;
  double tau;
  double zeeman;
  double hyperfine;
};

// sigma (G), gate time, 174 and 171 dephasing probabilities.
constexpr Row kTable[] = {
    {1e-2, 1e-6, 1.93e-3, 1.90e-14},  {1e-3, 1e-6, 1.93e-5, 1.90e-18},  {1e-4, 1e-6, 1.93e-7, 1.90e-22},
    {1e-5, 1e-6, 1.93e-9, 1.90e-26},  {1e-6, 1e-6, 1.93e-11, 1.90e-30}, {1e-2, 200e-6, 0.50, 7.62e-10},
    {1e-3, 200e-6, 0.39, 7.62e-14},   {1e-4, 200e-6, 7.69e-3, 7.62e-18}, {1e-5, 200e-6, 7.75e-5, 7.62e-22},
    {1e-6, 200e-6, 7.75e-7, 7.62e-26},
};

double zeeman_p(double sigma, double tau) {
  return dephasing_probability({sigma, 0.0, tau, IsotopeKind::zeeman});
}

double hyperfine_p(double sigma, double tau, double b0 = 0.0) {
  return dephasing_probability({sigma, b0, tau, IsotopeKind::hyperfine, kDefaultHyperfineSplitting});
}

}  // namespace

TEST(FieldNoise, ZeemanColumnWithinTwoPercent) {
  for (const auto& row : kTable) {
    EXPECT_NEAR(zeeman_p(row.sigma, row.tau) / row.zeeman, 1.0, 0.02) << "sigma " << row.sigma << " tau " << row.tau;
  }
}

TEST(FieldNoise, ZeemanMatchesLinearPhaseOracle) {
  const PhysicalConstants k;
  for (double sigma : {1e-6, 1e-4, 3e-3}) {
    const double spread = 0.5 * k.electron_g * k.bohr_magneton_over_hbar * sigma * 200e-6;
    EXPECT_NEAR(zeeman_p(sigma, 200e-6), oracle::linear_phase_dephasing(spread), 1e-12);
  }
}

TEST(FieldNoise, HyperfineColumnWithinFactorTwo) {
  for (const auto& row : kTable) {
    const double ratio = hyperfine_p(row.sigma, row.tau) / row.hyperfine;
    EXPECT_GT(ratio, 0.5) << row.sigma;
    EXPECT_LT(ratio, 2.0) << row.sigma;
  }
}

TEST(FieldNoise, HyperfineQuarticAtZeroField) {
  for (double sigma : {1e-6, 1e-5, 1e-4, 1e-3}) {
    EXPECT_NEAR(hyperfine_p(2 * sigma, 200e-6) / hyperfine_p(sigma, 200e-6), 16.0, 0.16);
  }
}

TEST(FieldNoise, ClosedFormMatchesSampling) {
  // Phases of order one so the estimator has a useful relative error.
  const struct {
    double a, b, sigma;
  } cases[] = {{2.0, 0.0, 0.6}, {0.0, 1.5, 0.5}, {1.0, 2.0, 0.4}, {-3.0, 0.7, 0.3}};
  int seed = 11;
  for (const auto& c : cases) {
    const auto est = oracle::sampled_dephasing(c.a, c.b, c.sigma, 400000, seed++);
    const double exact = gaussian_dephasing({c.a, c.b}, c.sigma);
    EXPECT_NEAR(exact, est.mean, 5 * est.stderr_) << c.a << " " << c.b;
  }
}

TEST(FieldNoise, TinyProbabilitiesStayPositive) {
  const double p = hyperfine_p(1e-9, 1e-6);
  EXPECT_GT(p, 0.0);
  EXPECT_NEAR(hyperfine_p(2e-9, 1e-6) / p, 16.0, 0.16);
}

TEST(FieldNoise, DegenerateInputs) {
  EXPECT_EQ(zeeman_p(0.0, 200e-6), 0.0);
  EXPECT_EQ(zeeman_p(1e-4, 0.0), 0.0);
  EXPECT_EQ(hyperfine_p(0.0, 200e-6), 0.0);
  EXPECT_THROW(hyperfine_shift(1e-3, 0.0, 0.0), std::domain_error);
  EXPECT_THROW(hyperfine_shift(1e-3, 0.0, -1.0), std::domain_error);
}

TEST(FieldNoise, ShiftsAreSymmetricOrQuadratic) {
  EXPECT_DOUBLE_EQ(zeeman_shift(1e-3), -zeeman_shift(-1e-3));
  const double w = kDefaultHyperfineSplitting;
  EXPECT_DOUBLE_EQ(hyperfine_shift(1e-3, 0.0, w), hyperfine_shift(-1e-3, 0.0, w));
  EXPECT_NEAR(hyperfine_shift(2e-3, 0.0, w) / hyperfine_shift(1e-3, 0.0, w), 4.0, 1e-12);
}

TEST(FieldNoise, HyperfineAtMegahertzFieldComparableToScaledZeeman) {
  const double b0 = field_for_zeeman_splitting(2.0 * M_PI * 1e6);
  EXPECT_NEAR(b0, 0.357, 0.002);
  for (double sigma : {1e-3, 1e-2}) {
    const double ratio = hyperfine_p(sigma, 200e-6, b0) / zeeman_p(1e-4 * sigma, 200e-6);
    EXPECT_GT(ratio, 0.1);
    EXPECT_LT(ratio, 10.0);
  }
}
