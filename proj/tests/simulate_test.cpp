#include <gtest/gtest.h>

#include <cmath>

#include "rggdim/error.hpp"
#include "rggdim/simulate.hpp"

namespace rggdim {
namespace {

TEST(RunReplicate, Deterministic) {
  const SimConfig config{100, 1, 0.10, 1, 0.05, 10, 42};
  for (std::size_t idx : {0U, 3U, 999U}) {
    const auto a = run_replicate(config, idx);
    const auto b = run_replicate(config, idx);
    ASSERT_FALSE(a.degenerate());
    EXPECT_EQ(a.result, b.result);
  }
  EXPECT_NE(run_replicate(config, 0).result, run_replicate(config, 1).result);
}

TEST(RunReplicate, EmptyGraphIsDegenerateStatus) {
  const SimConfig config{5, 1, 0.0, 1, 0.05, 1, 1};
  const auto outcome = run_replicate(config, 0);
  EXPECT_TRUE(outcome.degenerate());
}

TEST(RunReplicate, ScaledDnIsInteger) {
  const SimConfig config{100, 1, 0.10, 1, 0.05, 1, 7};
  for (std::size_t idx = 0; idx < 20; ++idx) {
    const auto outcome = run_replicate(config, idx);
    ASSERT_FALSE(outcome.degenerate());
    const double scaled = 4.0 * outcome.result->d_n;
    EXPECT_EQ(scaled, std::round(scaled));
  }
}

TEST(SimConfig, Validation) {
  EXPECT_THROW((SimConfig{100, 1, 0.1, 1, 0.05, 0, 1}.validate()), InvalidInput);
  EXPECT_THROW((SimConfig{100, 1, 0.1, 0, 0.05, 5, 1}.validate()), InvalidInput);
  EXPECT_THROW((SimConfig{100, 1, 0.7, 1, 0.05, 5, 1}.validate()), InvalidInput);
  EXPECT_THROW((SimConfig{3, 1, 0.1, 1, 0.05, 5, 1}.validate()), InvalidInput);
  EXPECT_THROW((SimConfig{100, 1, 0.1, 1, 0.0, 5, 1}.validate()), InvalidInput);
}

TEST(EstimateRejectionRate, ReportInvariants) {
  const SimConfig config{60, 2, 0.29, 2, 0.05, 200, 3};
  const SimReport rep = estimate_rejection_rate(config);
  const std::size_t valid = config.reps - rep.degenerate_count;
  EXPECT_LE(rep.rejections, valid);
  EXPECT_DOUBLE_EQ(rep.rejection_rate, static_cast<double>(rep.rejections) / valid);
  EXPECT_DOUBLE_EQ(rep.std_error,
                   std::sqrt(rep.rejection_rate * (1 - rep.rejection_rate) / valid));
  EXPECT_EQ(rep.degenerate_count, 0U);
}

TEST(EstimateRejectionRate, IndependentOfThreadCount) {
  const SimConfig config{70, 1, 0.09, 1, 0.05, 120, 11};
  const SimReport one = estimate_rejection_rate(config, 1);
  for (unsigned threads : {2U, 4U, 8U}) {
    EXPECT_EQ(estimate_rejection_rate(config, threads), one) << threads << " threads";
  }
}

TEST(EstimateRejectionRate, SingleReplicate) {
  const SimReport rep = estimate_rejection_rate(SimConfig{70, 2, 0.10, 1, 0.05, 1, 5});
  EXPECT_TRUE(rep.rejection_rate == 0.0 || rep.rejection_rate == 1.0);
}

TEST(EstimateRejectionRate, AllDegenerateFails) {
  EXPECT_THROW(estimate_rejection_rate(SimConfig{6, 1, 0.0, 1, 0.05, 4, 5}), EstimationFailed);
}

TEST(EstimateRejectionRate, PowerGrowsWithN) {
  double previous_rate = 0.0;
  double previous_se = 0.0;
  for (std::size_t n : {70U, 100U, 130U}) {
    const SimReport rep = estimate_rejection_rate(SimConfig{n, 2, 0.10, 1, 0.05, 300, 21});
    EXPECT_GE(rep.rejection_rate + 2.0 * std::hypot(rep.std_error, previous_se), previous_rate)
        << "n=" << n;
    previous_rate = rep.rejection_rate;
    previous_se = rep.std_error;
  }
}

}  // namespace
}  // namespace rggdim
