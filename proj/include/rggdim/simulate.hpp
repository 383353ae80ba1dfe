#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rggdim/dimtest.hpp"
#include "rggdim/geometry.hpp"

namespace rggdim {

/// One Monte Carlo cell: draw `reps` graphs from G_n(m, r), test H0: m = m0
/// at level alpha on each.
struct SimConfig {
  std::size_t n = 100;
  std::size_t m = 1;
  double r = 0.1;
  unsigned m0 = 1;
  double alpha = 0.05;
  std::size_t reps = 1000;
  std::uint64_t seed = 0;

  void validate() const;

  /// Generation parameters for replicate `index`; its stream key is
  /// derive_key(seed, index).
  RggParams replicate_params(std::size_t index) const;
};

struct ReplicateOutcome {
  std::size_t index = 0;
  std::optional<TestResult> result;  // empty: degenerate variance

  bool degenerate() const noexcept { return !result.has_value(); }
};

/// Deterministic in (config, index).
ReplicateOutcome run_replicate(const SimConfig& config, std::size_t index);

struct SimReport {
  SimConfig config;
  std::size_t rejections = 0;
  std::size_t degenerate_count = 0;
  double rejection_rate = 0.0;  // rejections / (reps - degenerate_count)
  double std_error = 0.0;       // sqrt(rate (1 - rate) / (reps - degenerate_count))

  friend bool operator==(const SimReport& x, const SimReport& y) {
    return x.rejections == y.rejections && x.degenerate_count == y.degenerate_count &&
           x.rejection_rate == y.rejection_rate && x.std_error == y.std_error;
  }
};

/// Runs replicates 0..reps-1 on `threads` workers (0 = hardware concurrency).
/// The report depends only on `config`, never on the schedule. Throws
/// EstimationFailed if every replicate is degenerate.
SimReport estimate_rejection_rate(const SimConfig& config, unsigned threads = 1);

}  // namespace rggdim
