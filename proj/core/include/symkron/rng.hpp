#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace symkron {

/// Deterministic random source: one mt19937_64 stream plus a stable way to
/// derive independent child streams from the same root seed.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed);

  /// Uniform draw from [0, 1) with 53-bit resolution.
  double uniform();

  /// Unbiased uniform draw from {0, ..., bound-1}.
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Child stream fully determined by (seed, stream), independent of any
  /// draws already made from this instance.
  SplitRng split(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Index draw proportional to unnormalized nonnegative weights.
int sample_index(const std::vector<double>& weights, SplitRng& rng);

}  // namespace symkron
