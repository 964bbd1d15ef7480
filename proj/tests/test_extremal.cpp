#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "mp_oracle.hpp"
#include "normgap/extremal.hpp"

using normgap::DomainError;
using normgap::EqualityClass;
using normgap::Exponents;
using normgap::ExtremalConfig;
using normgap::Signal;

namespace {

const Exponents kL1L2{1.0, 2.0};

std::vector<Exponents> exponent_grid() {
  std::vector<Exponents> out;
  for (double p : {0.1, 0.5, 1.0}) {
    for (double q : {1.5, 2.0, 4.0}) out.emplace_back(p, q);
  }
  return out;
}

}  // namespace

TEST(ExtremalConfig, RealizeAndValidate) {
  const Signal x = ExtremalConfig{5, 2, 3.0, 1.0}.realize();
  EXPECT_EQ(x, (Signal{3.0, 3.0, 1.0, 1.0, 1.0}));
  EXPECT_THROW((ExtremalConfig{1, 1, 1.0, 0.0}.realize()), DomainError);
  EXPECT_THROW((ExtremalConfig{4, 0, 1.0, 0.0}.realize()), DomainError);
  EXPECT_THROW((ExtremalConfig{4, 4, 1.0, 0.0}.realize()), DomainError);
  EXPECT_THROW((ExtremalConfig{4, 1, 1.0, 1.0}.realize()), DomainError);
  EXPECT_THROW((ExtremalConfig{4, 1, 0.0, 0.0}.realize()), DomainError);
}

TEST(LOfK, Examples) {
  EXPECT_NEAR(normgap::l_of_k(1.0, 4, kL1L2), 0.5, 1e-15);
  for (const Exponents& e : exponent_grid()) {
    for (std::size_t n : {2U, 7U, 100U}) {
      const double ks = normgap::k_star(n, e);
      const double peak = std::pow(static_cast<double>(n), 1.0 / e.q()) * normgap::sharpness_constant(e);
      EXPECT_NEAR(normgap::l_of_k(ks, n, e), peak, 1e-13 * peak);
      EXPECT_NEAR(normgap::l_of_k(n * (1 - 1e-12), n, e), 0.0, 1e-8);
    }
  }
  EXPECT_THROW(normgap::l_of_k(0.0, 4, kL1L2), DomainError);
  EXPECT_THROW(normgap::l_of_k(4.0, 4, kL1L2), DomainError);
}

TEST(LOfK, MatchesOracleAndRealizedGap) {
  for (const Exponents& e : exponent_grid()) {
    for (std::size_t n : {2U, 3U, 10U, 33U}) {
      for (std::size_t k = 1; k < n; ++k) {
        const double want = oracle::to_double(oracle::l(oracle::Real(k), n, e.p(), e.q()));
        EXPECT_NEAR(normgap::l_of_k(static_cast<double>(k), n, e), want, 1e-13 * std::pow(n, 1.0 / e.q()));
        const Signal x = ExtremalConfig{n, k, 1.0, 0.0}.realize();
        EXPECT_NEAR(normgap::gap(x, e), normgap::l_of_k(static_cast<double>(k), n, e), 1e-12);
      }
    }
  }
}

TEST(KStar, Examples) {
  EXPECT_NEAR(normgap::k_star(4, kL1L2), 1.0, 1e-15);
  EXPECT_NEAR(normgap::k_star(8, kL1L2), 2.0, 1e-15);
  EXPECT_NEAR(normgap::k_star(2, kL1L2), 0.5, 1e-15);
  EXPECT_THROW(normgap::k_star(1, kL1L2), DomainError);
  for (const Exponents& e : exponent_grid()) {
    const double want = oracle::to_double(oracle::m_star(50, e.p(), e.q()));
    EXPECT_NEAR(normgap::k_star(50, e), want, 1e-13 * want);
  }
}

TEST(BestIntegerConfig, Examples) {
  const ExtremalConfig four = normgap::best_integer_config(4, kL1L2);
  EXPECT_EQ(four, (ExtremalConfig{4, 1, 1.0, 0.0}));
  const Signal x4 = four.realize();
  EXPECT_NEAR(normgap::gap(x4, kL1L2), 0.5, 1e-15);
  EXPECT_NEAR(normgap::upper_bound(x4, kL1L2), 0.5, 1e-15);
  EXPECT_EQ(normgap::classify_equality(x4, kL1L2, 1e-9), EqualityClass::second);

  const ExtremalConfig two = normgap::best_integer_config(2, kL1L2);
  EXPECT_EQ(two.k, 1U);
  const Signal x2 = two.realize();
  EXPECT_NEAR(normgap::gap(x2, kL1L2), 0.2928932188134525, 1e-15);
  EXPECT_NEAR(normgap::upper_bound(x2, kL1L2), 0.3535533905932738, 1e-15);

  // k* = 8 * 0.25^{2/3} = 3.1748...; l(3) = 1.33430, l(4) = 1.29289 (40-digit oracle)
  const Exponents half_two{0.5, 2.0};
  EXPECT_NEAR(normgap::k_star(8, half_two), 3.174802103936399, 1e-14);
  const double l3 = oracle::to_double(oracle::l(3, 8, 0.5, 2));
  const double l4 = oracle::to_double(oracle::l(4, 8, 0.5, 2));
  EXPECT_NEAR(l3, 1.334303243151444, 1e-14);
  EXPECT_NEAR(l4, 1.292893218813452, 1e-14);
  EXPECT_EQ(normgap::best_integer_config(8, half_two).k, 3U);
}

TEST(BestIntegerConfig, RealizedGapMatchesLOfK) {
  for (const Exponents& e : exponent_grid()) {
    for (std::size_t n = 2; n <= 200; n += 7) {
      const ExtremalConfig cfg = normgap::best_integer_config(n, e);
      EXPECT_NEAR(normgap::gap(cfg.realize(), e), normgap::l_of_k(static_cast<double>(cfg.k), n, e), 1e-12);
    }
  }
}

TEST(BestIntegerConfig, BeatsEveryOtherBorderConfiguration) {
  for (const Exponents& e : exponent_grid()) {
    for (std::size_t n = 2; n <= 64; ++n) {
      const ExtremalConfig best = normgap::best_integer_config(n, e);
      const double best_gap = normgap::gap(best.realize(), e);
      for (std::size_t k = 1; k < n; ++k) {
        EXPECT_GE(best_gap + 1e-14, normgap::gap(ExtremalConfig{n, k, 1.0, 0.0}.realize(), e))
            << "n=" << n << " k=" << k;
      }
    }
  }
}

TEST(BestIntegerConfig, IntegerLValuesStayBelowContinuousPeak) {
  for (const Exponents& e : exponent_grid()) {
    for (std::size_t n = 2; n <= 128; ++n) {
      const double peak_cont = normgap::l_of_k(normgap::k_star(n, e), n, e);
      const double bound = std::pow(static_cast<double>(n), 1.0 / e.q()) * normgap::sharpness_constant(e);
      EXPECT_LE(peak_cont, bound * (1 + 1e-14));
      for (std::size_t k = 1; k < n; ++k) {
        EXPECT_LE(normgap::l_of_k(static_cast<double>(k), n, e), peak_cont * (1 + 1e-14) + 1e-15);
      }
    }
  }
}

TEST(AttainmentRatio, Examples) {
  EXPECT_NEAR(normgap::attainment_ratio(4, kL1L2), 1.0, 1e-10);
  EXPECT_NEAR(normgap::attainment_ratio(2, kL1L2), 0.8284271247461901, 1e-14);
  EXPECT_NEAR(normgap::attainment_ratio(8, kL1L2), 1.0, 1e-10);
}

TEST(AttainmentRatio, ApproachesOneWithN) {
  for (const Exponents& e : exponent_grid()) {
    double worst_scaled_deficit = 0.0;
    for (std::size_t n = 2; n <= 4096; ++n) {
      const double ratio = normgap::attainment_ratio(n, e);
      EXPECT_GT(ratio, 0.0);
      EXPECT_LE(ratio, 1.0 + 1e-12);
      worst_scaled_deficit = std::max(worst_scaled_deficit, (1.0 - ratio) * static_cast<double>(n));
    }
    // 1 - ratio = O(1/n): bounded once multiplied by n
    EXPECT_LT(worst_scaled_deficit, 2.0) << "p=" << e.p() << " q=" << e.q();
  }
}

TEST(Extremal, EqualityExactlyAtIntegerKStar) {
  for (const Exponents& e : exponent_grid()) {
    for (std::size_t n = 2; n <= 256; ++n) {
      const Signal x = normgap::best_integer_config(n, e).realize();
      const auto r = normgap::verify(x, e);
      EXPECT_TRUE(r.verified);
      const double ks = normgap::k_star(n, e);
      const bool integer_k = std::abs(ks - std::round(ks)) <= normgap::m_star_integer_tol(n) &&
                             std::round(ks) >= 1.0 && std::round(ks) <= static_cast<double>(n - 1);
      if (integer_k) {
        EXPECT_TRUE(r.equality_second) << "n=" << n << " p=" << e.p() << " q=" << e.q();
        EXPECT_FALSE(r.warning.has_value());
      } else if (r.equality_second) {
        // k* within ~1e-3 of an integer leaves a slack below the numeric
        // tolerance; the report must then flag the structural mismatch.
        EXPECT_GT(r.slack, 0.0);
        EXPECT_TRUE(r.warning.has_value()) << "n=" << n << " p=" << e.p() << " q=" << e.q();
      }
    }
  }
}
