#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "mp_oracle.hpp"
#include "normgap/norms.hpp"

using normgap::DomainError;
using normgap::InvalidInput;
using normgap::Signal;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

}  // namespace

TEST(Signal, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(Signal(std::vector<double>{}), InvalidInput);
  EXPECT_THROW(Signal({1.0, std::numeric_limits<double>::quiet_NaN()}), InvalidInput);
  EXPECT_THROW(Signal({std::numeric_limits<double>::infinity()}), InvalidInput);
  EXPECT_NO_THROW(Signal({0.0}));
}

TEST(PExponent, RejectsNonPositive) {
  const Signal x{1.0, 2.0};
  EXPECT_THROW(normgap::lp_norm(x, 0.0), DomainError);
  EXPECT_THROW(normgap::lp_norm(x, -1.0), DomainError);
  EXPECT_THROW(normgap::lp_norm_pth_power(x, std::numeric_limits<double>::infinity()), DomainError);
}

TEST(LpNorm, Examples) {
  EXPECT_DOUBLE_EQ(normgap::lp_norm(Signal{3.0, 4.0}, 2.0), 5.0);
  EXPECT_DOUBLE_EQ(normgap::lp_norm(Signal(std::vector<double>(8, 1.0)), 0.5), 64.0);
  // (1 + sqrt 2 + sqrt 3)^2, frozen from a 40-digit evaluation
  const double expected = 17.19150822545030088105283828084292367496;
  EXPECT_NEAR(normgap::lp_norm(Signal{1.0, 2.0, 3.0}, 0.5), expected, 4e-15 * expected);
  EXPECT_NEAR(oracle::to_double(oracle::lp({1.0, 2.0, 3.0}, oracle::Real(0.5))), expected,
              1e-15 * expected);
}

TEST(LpNorm, ZeroVector) {
  for (double p : {1e-6, 0.5, 1.0, 3.0}) {
    EXPECT_EQ(normgap::lp_norm(Signal{0.0, 0.0, 0.0}, p), 0.0);
    EXPECT_EQ(normgap::lp_norm_pth_power(Signal{0.0, -0.0}, p), 0.0);
    EXPECT_EQ(normgap::normalized_lp(Signal{0.0}, p), 0.0);
  }
}

TEST(LpNorm, NoOverflowOrUnderflow) {
  EXPECT_NEAR(normgap::lp_norm(Signal{1e300, 1e300}, 0.5), 4e300, 4e300 * 1e-15);
  EXPECT_NEAR(normgap::lp_norm(Signal{1e-300, 1e-300}, 0.5), 4e-300, 4e-300 * 1e-15);
  EXPECT_GT(normgap::lp_norm(Signal{1e-300, 1e-300}, 0.5), 0.0);
  // |x_i|^p with p = 1e-6 for moderate entries stays representable
  EXPECT_NEAR(normgap::lp_norm_pth_power(Signal{1e300, 1e-300}, 1e-6), 2.0, 2e-3);
}

TEST(LpNorm, AgreesWithHighPrecisionOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 17;
    const auto x = random_vector(rng, n);
    for (double p : {0.1, 0.5, 1.0, 1.5, 2.0, 4.0}) {
      const double want = oracle::to_double(oracle::lp(x, oracle::Real(p)));
      EXPECT_NEAR(normgap::lp_norm(Signal(x), p), want, 64 * n * 1e-16 / p * want);
      const double want_mean = oracle::to_double(oracle::normalized_lp(x, oracle::Real(p)));
      EXPECT_NEAR(normgap::normalized_lp(Signal(x), p), want_mean, 64 * n * 1e-16 / p * want_mean);
    }
  }
}

TEST(LpNormPthPower, Examples) {
  EXPECT_DOUBLE_EQ(normgap::lp_norm_pth_power(Signal{0.0, 0.0, 5.0}, 1.0), 5.0);
  EXPECT_DOUBLE_EQ(normgap::lp_norm_pth_power(Signal{1.0, 1.0}, 0.5), 2.0);
  const Signal x{2.0, 0.0, 3.0};
  EXPECT_NEAR(normgap::lp_norm_pth_power(x, 1e-6), static_cast<double>(normgap::l0_norm(x)), 1e-4);
}

TEST(L0Norm, ThresholdSemantics) {
  EXPECT_EQ(normgap::l0_norm(Signal{0.0, 0.0, 0.0}, 0.0), 0U);
  EXPECT_EQ(normgap::l0_norm(Signal{0.0, 0.0, 0.0}, 1.0), 0U);
  EXPECT_EQ(normgap::l0_norm(Signal{1e-12, 2.0, 0.0}, 1e-9), 1U);
  EXPECT_EQ(normgap::l0_norm(Signal{0.5, -0.5, 0.0}, 0.0), 2U);
  EXPECT_THROW(normgap::l0_norm(Signal{1.0}, -1.0), DomainError);
}

TEST(NormalizedLp, Examples) {
  for (std::size_t n : {1U, 3U, 10U}) {
    for (double p : {0.01, 0.5, 1.0, 2.0}) {
      EXPECT_DOUBLE_EQ(normgap::normalized_lp(Signal(std::vector<double>(n, -2.5)), p), 2.5);
    }
  }
  EXPECT_DOUBLE_EQ(normgap::normalized_lp(Signal{1.0, 0.0}, 1.0), 0.5);
  // ((1 + sqrt 2 + 2) / 3)^2
  const double expected = 2.165031263804285588090014705028687607935;
  EXPECT_NEAR(normgap::normalized_lp(Signal{1.0, 2.0, 4.0}, 0.5), expected, 4e-15 * expected);
}

TEST(MaxAbsMinAbs, Examples) {
  EXPECT_EQ(normgap::max_abs_min_abs(Signal{-3.0, 1.0, 0.0}), std::make_pair(3.0, 0.0));
  EXPECT_EQ(normgap::max_abs_min_abs(Signal{5.0}), std::make_pair(5.0, 5.0));
  EXPECT_EQ(normgap::max_abs_min_abs(Signal{2.0, 2.0, 2.0}), std::make_pair(2.0, 2.0));
}

TEST(NormProperties, Homogeneity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> alpha_dist(-1e3, 1e3);
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int trial = 0; trial < 500; ++trial) {
    const auto x = random_vector(rng, 1 + trial % 9);
    const double alpha = alpha_dist(rng);
    std::vector<double> ax(x);
    for (double& v : ax) v *= alpha;
    for (double p : {0.25, 0.5, 1.0, 2.0, 3.0}) {
      const double base = normgap::lp_norm(Signal(x), p);
      const double scaled = normgap::lp_norm(Signal(ax), p);
      // Each ratio |a x_i| / |a M| carries a few ulps; the 1/p root scales
      // the relative error of the sum by 1/p.
      EXPECT_NEAR(scaled, std::abs(alpha) * base, 4 * eps * (2.0 + 1.0 / p) * std::abs(alpha) * base);
    }
  }
}

TEST(NormProperties, PermutationAndSignInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_vector(rng, 2 + trial % 7);
    auto y = x;
    std::shuffle(y.begin(), y.end(), rng);
    for (double& v : y) {
      if (rng() & 1U) v = -v;
    }
    const Signal sx(x);
    const Signal sy(y);
    for (double p : {0.3, 1.0, 2.5}) {
      EXPECT_NEAR(normgap::lp_norm(sx, p), normgap::lp_norm(sy, p), 1e-13 * normgap::lp_norm(sx, p));
      EXPECT_NEAR(normgap::normalized_lp(sx, p), normgap::normalized_lp(sy, p),
                  1e-13 * normgap::normalized_lp(sx, p));
      EXPECT_NEAR(normgap::lp_norm_pth_power(sx, p), normgap::lp_norm_pth_power(sy, p),
                  1e-13 * normgap::lp_norm_pth_power(sx, p));
    }
    EXPECT_EQ(normgap::l0_norm(sx), normgap::l0_norm(sy));
    EXPECT_EQ(normgap::max_abs_min_abs(sx), normgap::max_abs_min_abs(sy));
  }
}

TEST(NormProperties, PowerMeanMonotoneInP) {
  std::mt19937_64 rng(7);
  const std::vector<double> grid{0.05, 0.1, 0.3, 0.5, 0.9, 1.0, 1.2, 2.0, 3.5, 8.0};
  for (int trial = 0; trial < 200; ++trial) {
    auto x = random_vector(rng, 1 + trial % 12);
    if (trial % 3 == 0) x[0] = 0.0;
    const Signal s(x);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double lo = normgap::normalized_lp(s, grid[i - 1]);
      const double hi = normgap::normalized_lp(s, grid[i]);
      EXPECT_LE(lo, hi * (1 + 1e-14));
    }
  }
}

TEST(NormProperties, PthPowerTendsToSupportSize) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> value(-9, 9);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> x(1 + trial % 20);
    for (double& v : x) v = value(rng);
    const Signal s(x);
    const auto l0 = static_cast<double>(normgap::l0_norm(s));
    EXPECT_LT(std::abs(normgap::lp_norm_pth_power(s, 1e-6) - l0), 1e-4 * l0 + 1e-6);
  }
}
