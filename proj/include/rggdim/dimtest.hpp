#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rggdim/adjacency.hpp"
#include "rggdim/motifs.hpp"

namespace rggdim {

/// Outcome of testing H0: m = m0 against H1: m != m0 on one graph.
struct TestResult {
  std::size_t n = 0;
  unsigned m0 = 1;
  double alpha = 0.05;
  double d_n = 0.0;
  double sigma2_hat = 0.0;
  double statistic = 0.0;  // sqrt(2) D_n / (n^2 sigma_hat)
  double p_value = 1.0;    // 2 (1 - Phi(|statistic|))
  bool reject = false;     // |statistic| >= Z_{alpha/2}

  friend bool operator==(const TestResult&, const TestResult&) = default;
};

/// (3/4)^m0 by repeated multiplication; exact while 3^m0 < 2^53.
double three_quarters_power(unsigned m0);

/// D_n = tri3 - (3/4)^m0 path2.
double compute_dn(const MotifCounts& counts, unsigned m0);

/// Plug-in variance estimator
///
///   [36 - 24 q] S1 + [16 q^2 - 48 q] S2 + 8 q^2 S3 + 4 q^2 S4 + 8 q^2 S5,
///
/// with q = (3/4)^m0 and S_i = raw_i / n^4. Requires n >= 4. The S2 weight is
/// negative, so the result can be zero or negative on small graphs.
double compute_sigma2_hat(const MotifCounts& counts, unsigned m0);

/// Standardizes D_n and applies the two-sided normal rejection rule.
/// Throws InvalidInput if n < 4, m0 < 1 or alpha is outside (0, 1), and
/// DegenerateVariance if sigma2_hat <= 0.
TestResult test_from_counts(const MotifCounts& counts, unsigned m0, double alpha);

/// Counts motifs with the fast kernels, then calls test_from_counts.
TestResult run_test(const AdjacencyMatrix& a, unsigned m0, double alpha = 0.05);

struct ScanEntry {
  unsigned m0 = 1;
  double d_n = 0.0;
  double sigma2_hat = 0.0;
  std::optional<TestResult> result;  // empty when the variance estimate is degenerate

  bool degenerate() const noexcept { return !result.has_value(); }
};

/// One entry per requested m0, sharing a single motif count. Degenerate
/// variances are reported per entry; InvalidInput (n < 4, m0 = 0, bad alpha)
/// still propagates.
std::vector<ScanEntry> scan_m0(const AdjacencyMatrix& a, std::span<const unsigned> m0_values,
                               double alpha = 0.05);

std::vector<ScanEntry> scan_m0(const MotifCounts& counts, std::span<const unsigned> m0_values,
                               double alpha = 0.05);

}  // namespace rggdim
