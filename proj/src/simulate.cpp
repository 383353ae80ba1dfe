#include "rggdim/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "rggdim/error.hpp"
#include "rggdim/rng.hpp"

namespace rggdim {

void SimConfig::validate() const {
  if (reps < 1) throw InvalidInput("reps must be at least 1");
  if (m0 < 1) throw InvalidInput("m0 must be a positive integer");
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  if (n < 4) throw InvalidInput("the dimension test needs n >= 4");
  RggParams{n, m, r, seed}.validate();
}

RggParams SimConfig::replicate_params(std::size_t index) const {
  return RggParams{n, m, r, derive_key(seed, index)};
}

ReplicateOutcome run_replicate(const SimConfig& config, std::size_t index) {
  config.validate();
  const Rgg graph = generate_rgg(config.replicate_params(index));
  ReplicateOutcome out;
  out.index = index;
  try {
    out.result = run_test(graph.adjacency, config.m0, config.alpha);
  } catch (const DegenerateVariance&) {
    out.result.reset();
  }
  return out;
}

SimReport estimate_rejection_rate(const SimConfig& config, unsigned threads) {
  config.validate();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, config.reps));

  // 0 = accepted, 1 = rejected, 2 = degenerate; one slot per replicate.
  std::vector<unsigned char> status(config.reps, 0);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (std::size_t idx = next.fetch_add(1); idx < config.reps; idx = next.fetch_add(1)) {
        const ReplicateOutcome outcome = run_replicate(config, idx);
        status[idx] = outcome.degenerate() ? 2 : (outcome.result->reject ? 1 : 0);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(config.reps);
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SimReport report;
  report.config = config;
  for (unsigned char s : status) {
    report.rejections += s == 1;
    report.degenerate_count += s == 2;
  }
  const std::size_t valid = config.reps - report.degenerate_count;
  if (valid == 0) throw EstimationFailed("every replicate had a degenerate variance estimate");
  report.rejection_rate = static_cast<double>(report.rejections) / static_cast<double>(valid);
  report.std_error = std::sqrt(report.rejection_rate * (1.0 - report.rejection_rate) /
                               static_cast<double>(valid));
  return report;
}

}  // namespace rggdim
