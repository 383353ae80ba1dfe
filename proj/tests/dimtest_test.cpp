#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "normal_reference.hpp"
#include "rggdim/dimtest.hpp"
#include "rggdim/error.hpp"
#include "rggdim/geometry.hpp"
#include "rggdim/normal.hpp"
#include "rggdim/rng.hpp"
#include "test_graphs.hpp"

namespace rggdim {
namespace {

using testing::complete_graph;

TEST(ComputeDn, Examples) {
  EXPECT_DOUBLE_EQ(compute_dn(motif_counts_fast(complete_graph(3)), 1), 1.5);
  EXPECT_EQ(compute_dn(motif_counts_fast(testing::empty_graph(6)), 3), 0.0);
  for (unsigned m0 : {1U, 2U, 5U}) {
    const double falling = 9.0 * 8.0 * 7.0;
    EXPECT_DOUBLE_EQ(compute_dn(motif_counts_fast(complete_graph(9)), m0),
                     falling * (1.0 - std::pow(0.75, m0)));
  }
}

TEST(ComputeDn, RejectsZeroM0) {
  EXPECT_THROW(compute_dn(motif_counts_fast(complete_graph(4)), 0), InvalidInput);
}

TEST(ThreeQuartersPower, ExactForModerateExponents) {
  for (unsigned m0 = 0; m0 <= 30; ++m0) {
    EXPECT_EQ(three_quarters_power(m0), std::ldexp(std::pow(3.0, m0), -2 * static_cast<int>(m0)));
  }
}

TEST(ComputeSigma2Hat, CompleteGraphK4) {
  EXPECT_DOUBLE_EQ(compute_sigma2_hat(motif_counts_fast(complete_graph(4)), 1), 0.2109375);
}

TEST(ComputeSigma2Hat, EmptyGraphIsZero) {
  EXPECT_EQ(compute_sigma2_hat(motif_counts_fast(testing::empty_graph(7)), 2), 0.0);
}

TEST(ComputeSigma2Hat, Star) {
  EXPECT_DOUBLE_EQ(compute_sigma2_hat(motif_counts_fast(testing::star_graph(3)), 1), 0.10546875);
}

TEST(ComputeSigma2Hat, NeedsFourNodes) {
  EXPECT_THROW(compute_sigma2_hat(motif_counts_fast(complete_graph(3)), 1), InvalidInput);
}

TEST(RunTest, CompleteGraphK4) {
  const TestResult r = run_test(complete_graph(4), 1, 0.05);
  EXPECT_EQ(r.n, 4U);
  EXPECT_EQ(r.m0, 1U);
  EXPECT_EQ(r.d_n, 6.0);
  EXPECT_EQ(r.sigma2_hat, 0.2109375);
  // High-precision values from tests/oracles/normal_reference.py.
  EXPECT_NEAR(r.statistic, 1.154700538379251529, 1e-14);
  EXPECT_NEAR(r.p_value, 0.24821307898992358347, 1e-13);
  EXPECT_FALSE(r.reject);
}

TEST(RunTest, EmptyGraphIsDegenerate) {
  EXPECT_THROW(run_test(testing::empty_graph(10), 1), DegenerateVariance);
}

TEST(RunTest, InputValidation) {
  EXPECT_THROW(run_test(complete_graph(3), 1), InvalidInput);
  EXPECT_THROW(run_test(complete_graph(5), 0), InvalidInput);
  EXPECT_THROW(run_test(complete_graph(5), 1, 0.0), InvalidInput);
  EXPECT_THROW(run_test(complete_graph(5), 1, 1.0), InvalidInput);
}

TEST(RunTest, ZeroStatisticGivesUnitPValue) {
  // Search small graphs for D_n = 0 with a positive variance estimate.
  int found = 0;
  for (std::uint64_t code = 0; code < (1U << 15) && found < 5; ++code) {
    const auto a = testing::graph_from_code(6, code);
    const auto c = motif_counts_fast(a);
    if (compute_dn(c, 1) != 0.0 || !(compute_sigma2_hat(c, 1) > 0.0)) continue;
    const TestResult r = run_test(a, 1, 0.05);
    EXPECT_EQ(r.statistic, 0.0);
    EXPECT_EQ(r.p_value, 1.0);
    EXPECT_FALSE(r.reject);
    ++found;
  }
  EXPECT_GT(found, 0);
}

TEST(RunTest, DecisionInvariants) {
  const double z = two_sided_critical_value(0.05);
  EXPECT_NEAR(z, testing::kZ0025, 1e-9);
  std::mt19937_64 gen(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t m = 1 + t % 3;
    const auto g = generate_rgg(RggParams{80, m, m == 1 ? 0.1 : 0.25, gen()});
    for (unsigned m0 : {1U, 2U, 3U}) {
      TestResult r;
      try {
        r = run_test(g.adjacency, m0, 0.05);
      } catch (const DegenerateVariance&) {
        continue;
      }
      EXPECT_EQ(r.reject, std::fabs(r.statistic) >= z);
      EXPECT_EQ(r.reject, r.p_value <= 0.05);
      EXPECT_GE(r.p_value, 0.0);
      EXPECT_LE(r.p_value, 1.0);
      const double scaled = std::ldexp(r.d_n, 2 * static_cast<int>(m0));
      EXPECT_EQ(scaled, std::round(scaled));
    }
  }
}

TEST(RunTest, LabelInvariantBitForBit) {
  std::mt19937_64 gen(12);
  for (int t = 0; t < 20; ++t) {
    const auto g = generate_rgg(RggParams{120, 2, 0.12, gen()});
    const auto h = permute(g.adjacency, testing::random_permutation(120, gen));
    EXPECT_EQ(run_test(g.adjacency, 2), run_test(h, 2));
  }
}

TEST(ScanM0, CompleteGraphSmoke) {
  // On K_n every 4-node sum equals n(n-1)(n-2)(n-3) and both 3-node sums equal
  // n(n-1)(n-2), so sigma_hat = 6 (1 - q) sqrt(raw) / n^2 and the (1 - q)
  // factor cancels: the statistic is sqrt(2) (n)_3 / (6 sqrt((n)_4)) for every m0.
  const std::vector<unsigned> m0s{1, 2, 3};
  const auto entries = scan_m0(complete_graph(10), m0s);
  ASSERT_EQ(entries.size(), 3U);
  const double expected = std::sqrt(2.0) * 720.0 / (6.0 * std::sqrt(5040.0));
  double previous_dn = 0.0;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    EXPECT_EQ(entries[k].m0, m0s[k]);
    ASSERT_FALSE(entries[k].degenerate());
    const TestResult& r = *entries[k].result;
    EXPECT_TRUE(std::isfinite(r.statistic));
    EXPECT_TRUE(std::isfinite(r.p_value));
    EXPECT_NEAR(r.statistic, expected, 1e-12);
    // |D_n| itself is smallest at m0 = 1 and grows with m0.
    EXPECT_GT(std::fabs(r.d_n), previous_dn);
    previous_dn = std::fabs(r.d_n);
  }
}

TEST(ScanM0, MatchesIndividualTests) {
  const auto g = generate_rgg(RggParams{90, 2, 0.15, 8});
  const std::vector<unsigned> m0s{1, 2, 3, 4, 5};
  const auto entries = scan_m0(g.adjacency, m0s, 0.1);
  for (const auto& e : entries) {
    ASSERT_FALSE(e.degenerate());
    EXPECT_EQ(*e.result, run_test(g.adjacency, e.m0, 0.1));
  }
}

TEST(ScanM0, EmptyListAndDegenerateEntries) {
  EXPECT_TRUE(scan_m0(complete_graph(6), std::vector<unsigned>{}).empty());
  const std::vector<unsigned> m0s{1, 2, 3};
  const auto entries = scan_m0(testing::empty_graph(8), m0s);
  ASSERT_EQ(entries.size(), 3U);
  for (const auto& e : entries) {
    EXPECT_TRUE(e.degenerate());
    EXPECT_EQ(e.d_n, 0.0);
  }
}

TEST(Asymptotics, ScaledDnApproachesItsLimit) {
  // E[D_n] / (n(n-1)(n-2) r^(2m)) = 3^m - (3/4)^m0 4^m = -3 for m = 2, m0 = 1.
  for (std::size_t n : {200U, 400U}) {
    const double r = 0.15;
    double sum = 0.0;
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto g = generate_rgg(RggParams{n, 2, r, derive_key(0x9a9e5, n * 100 + s)});
      const double nn = static_cast<double>(n);
      sum += compute_dn(motif_counts_fast(g.adjacency), 1) /
             (nn * (nn - 1) * (nn - 2) * std::pow(r, 4.0));
    }
    const double mean = sum / 20.0;
    if (n == 400) {
      EXPECT_NEAR(mean, -3.0, 0.15 * 3.0);
    } else {
      EXPECT_LT(mean, 0.0);
    }
  }
}

TEST(Asymptotics, StatisticGrowsWithNUnderTheAlternative) {
  auto median_abs_stat = [](std::size_t n) {
    std::vector<double> stats;
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto g = generate_rgg(RggParams{n, 2, 0.10, derive_key(0x90e1, n * 1000 + s)});
      stats.push_back(std::fabs(run_test(g.adjacency, 1).statistic));
    }
    std::sort(stats.begin(), stats.end());
    return 0.5 * (stats[24] + stats[25]);
  };
  EXPECT_GT(median_abs_stat(130), median_abs_stat(70));
}

}  // namespace
}  // namespace rggdim
