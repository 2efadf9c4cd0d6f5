#include "molecule/sweep.hpp"

#include <gtest/gtest.h>

#include "molecule/counting.hpp"
#include "molecule/errors.hpp"
#include "support/oracles.hpp"

namespace molecule {
namespace {

TEST(SweepTest, PeriodOneShortCircuits) {
  const SweepResult r = all_centers_sweep(1);
  ASSERT_EQ(r.centers.size(), 1U);
  EXPECT_EQ(r.centers[0].c, ComplexParam(0.0));
  EXPECT_TRUE(r.ok());
}

TEST(SweepTest, PeriodThreeRootsOfTheCubic) {
  const SweepResult r = all_centers_sweep(3);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r.centers.size(), 3U);
  for (const Center& c : r.centers) {
    EXPECT_LT(std::abs(testing::horner(testing::kPeriod3Factor, c.c)), 1e-12);
    EXPECT_FALSE(c.address.has_value());
  }
  // Sorted by (re, im).
  EXPECT_NEAR(r.centers[0].c.real(), -1.754878, 1e-6);
  EXPECT_NEAR(r.centers[1].c.imag(), -0.744862, 1e-6);
  EXPECT_NEAR(r.centers[2].c.imag(), 0.744862, 1e-6);
}

TEST(SweepTest, PeriodSixCount) {
  const SweepResult r = all_centers_sweep(6);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.centers.size(), 27U);
  EXPECT_EQ(r.expected, BigCount(27));
}

TEST(SweepTest, CompletenessUpToTen) {
  for (unsigned n = 1; n <= 10; ++n) {
    const SweepResult r = all_centers_sweep(n);
    EXPECT_TRUE(r.ok()) << n << ": " << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_EQ(BigCount(r.centers.size()), BigCount(testing::brute_exact_period_roots(n))) << n;
    EXPECT_EQ(r.roots_found, std::size_t{1} << (n - 1));
    for (const Center& c : r.centers) {
      EXPECT_EQ(c.period, n);
      EXPECT_LE(c.residual, SweepConfig{}.residual_tol);
    }
  }
}

TEST(SweepTest, IndependentOfWorkerCount) {
  SweepConfig one;
  SweepConfig three;
  three.workers = 3;
  const SweepResult a = all_centers_sweep(8, one);
  const SweepResult b = all_centers_sweep(8, three);
  ASSERT_EQ(a.centers.size(), b.centers.size());
  for (std::size_t i = 0; i < a.centers.size(); ++i) EXPECT_EQ(a.centers[i].c, b.centers[i].c);
}

TEST(SweepTest, Errors) {
  EXPECT_THROW(all_centers_sweep(0), DomainError);
  EXPECT_THROW(all_centers_sweep(15), DomainError);
  SweepConfig cfg;
  cfg.max_iterations = 2;
  EXPECT_THROW(all_centers_sweep(8, cfg), ConvergenceError);
}

TEST(SweepTest, CountMismatchIsAFailureNotAnException) {
  SweepConfig cfg;
  cfg.classify_tol = 10.0;  // everything looks like period 1
  const SweepResult r = all_centers_sweep(4, cfg);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.centers.empty());
}

}  // namespace
}  // namespace molecule
