#include "rggdim/dimtest.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rggdim/error.hpp"
#include "rggdim/normal.hpp"

namespace rggdim {
namespace {

void check_m0(unsigned m0) {
  if (m0 < 1) throw InvalidInput("m0 must be a positive integer");
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
}

void check_quadruples(const MotifCounts& counts) {
  if (counts.n < 4) {
    throw InvalidInput("the variance estimator needs n >= 4, got n = " + std::to_string(counts.n));
  }
}

}  // namespace

double three_quarters_power(unsigned m0) {
  double q = 1.0;
  for (unsigned k = 0; k < m0; ++k) q *= 0.75;
  return q;
}

double compute_dn(const MotifCounts& counts, unsigned m0) {
  check_m0(m0);
  return static_cast<double>(counts.tri3) -
         three_quarters_power(m0) * static_cast<double>(counts.path2);
}

double compute_sigma2_hat(const MotifCounts& counts, unsigned m0) {
  check_m0(m0);
  check_quadruples(counts);
  const double q = three_quarters_power(m0);
  const double q2 = q * q;
  const double n = static_cast<double>(counts.n);
  const double n4 = n * n * n * n;
  const double s1 = static_cast<double>(counts.raw1) / n4;
  const double s2 = static_cast<double>(counts.raw2) / n4;
  const double s3 = static_cast<double>(counts.raw3) / n4;
  const double s4 = static_cast<double>(counts.raw4) / n4;
  const double s5 = static_cast<double>(counts.raw5) / n4;
  return (36.0 - 24.0 * q) * s1 + (16.0 * q2 - 48.0 * q) * s2 + 8.0 * q2 * s3 + 4.0 * q2 * s4 +
         8.0 * q2 * s5;
}

TestResult test_from_counts(const MotifCounts& counts, unsigned m0, double alpha) {
  check_alpha(alpha);
  TestResult out;
  out.n = counts.n;
  out.m0 = m0;
  out.alpha = alpha;
  out.d_n = compute_dn(counts, m0);
  out.sigma2_hat = compute_sigma2_hat(counts, m0);
  if (!(out.sigma2_hat > 0.0)) {
    throw DegenerateVariance("variance estimate is not positive (sigma2_hat = " +
                             std::to_string(out.sigma2_hat) + ")");
  }
  const double n = static_cast<double>(counts.n);
  out.statistic = std::numbers::sqrt2 * out.d_n / (n * n * std::sqrt(out.sigma2_hat));
  const double magnitude = std::fabs(out.statistic);
  out.p_value = std::fmin(1.0, 2.0 * normal_sf(magnitude));
  out.reject = magnitude >= two_sided_critical_value(alpha);
  return out;
}

TestResult run_test(const AdjacencyMatrix& a, unsigned m0, double alpha) {
  check_m0(m0);
  check_alpha(alpha);
  if (a.size() < 4) {
    throw InvalidInput("the dimension test needs n >= 4, got n = " + std::to_string(a.size()));
  }
  return test_from_counts(motif_counts_fast(a), m0, alpha);
}

std::vector<ScanEntry> scan_m0(const MotifCounts& counts, std::span<const unsigned> m0_values,
                               double alpha) {
  check_alpha(alpha);
  std::vector<ScanEntry> out;
  out.reserve(m0_values.size());
  for (unsigned m0 : m0_values) {
    ScanEntry entry;
    entry.m0 = m0;
    entry.d_n = compute_dn(counts, m0);
    entry.sigma2_hat = compute_sigma2_hat(counts, m0);
    try {
      entry.result = test_from_counts(counts, m0, alpha);
    } catch (const DegenerateVariance&) {
      entry.result.reset();
    }
    out.push_back(entry);
  }
  return out;
}

std::vector<ScanEntry> scan_m0(const AdjacencyMatrix& a, std::span<const unsigned> m0_values,
                               double alpha) {
  check_alpha(alpha);
  if (m0_values.empty()) return {};
  if (a.size() < 4) {
    throw InvalidInput("the dimension test needs n >= 4, got n = " + std::to_string(a.size()));
  }
  return scan_m0(motif_counts_fast(a), m0_values, alpha);
}

}  // namespace rggdim
