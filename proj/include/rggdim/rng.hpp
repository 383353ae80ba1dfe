#pragma once

// Counter-based random streams.
//
// Every draw is a pure function of (key, counter): the value at position `i` of a
// stream is `mix64(key + (i + 1) * kGamma)`, which is exactly the i-th output of a
// SplitMix64 generator started at `key`. Streams for sub-tasks are derived by
// hashing the parent key with an index, so replicate j of a simulation and node i
// of a graph can be drawn independently and in any order.
//
// The generator family (SplitMix64 finalizer, golden-ratio increment, 53-bit
// mantissa conversion) is fixed for the 1.x releases; changing it changes every
// seeded result.

#include <cstdint>

namespace rggdim {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 output finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Key of the child stream `index` of `parent`.
constexpr std::uint64_t derive_key(std::uint64_t parent, std::uint64_t index) noexcept {
  return mix64(mix64(parent ^ 0x6a09e667f3bcc909ULL) + (index + 1) * kGoldenGamma);
}

/// Maps 64 random bits onto the 2^53 evenly spaced doubles in [0, 1).
constexpr double to_unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

class CounterStream {
 public:
  constexpr explicit CounterStream(std::uint64_t key) noexcept : key_(key) {}

  constexpr std::uint64_t key() const noexcept { return key_; }

  constexpr std::uint64_t bits_at(std::uint64_t counter) const noexcept {
    return mix64(key_ + (counter + 1) * kGoldenGamma);
  }

  /// Uniform double in [0, 1) at position `counter`.
  constexpr double uniform_at(std::uint64_t counter) const noexcept {
    return to_unit_interval(bits_at(counter));
  }

 private:
  std::uint64_t key_;
};

}  // namespace rggdim
