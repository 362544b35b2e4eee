#include "symkron/rng.hpp"

#include "symkron/errors.hpp"

namespace symkron {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

double SplitRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t SplitRng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw DomainError("uniform_index: empty range");
  std::uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t v = engine_() & mask;
    if (v < bound) return v;
  }
}

SplitRng SplitRng::split(std::uint64_t stream) const {
  return SplitRng(splitmix64(seed_ ^ (0xa0761d6478bd642fULL * (stream + 1))));
}

int sample_index(const std::vector<double>& weights, SplitRng& rng) {
  double total = 0.0;
  for (const double w : weights) {
    if (w < 0.0) throw DomainError("sample_index: negative weight");
    total += w;
  }
  if (total <= 0.0) throw DomainError("sample_index: no positive weight");
  double u = rng.uniform() * total;
  for (size_t i = 0; i < weights.size(); ++i) {
    u -= weights[i];
    if (u < 0.0) return static_cast<int>(i);
  }
  return static_cast<int>(weights.size()) - 1;
}

}  // namespace symkron
