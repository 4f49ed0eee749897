#pragma once

#include <cstdint>

namespace periods {

// SplitMix64. Every random choice in the engine flows from one 64-bit seed
// through this generator; parallel trial runners derive independent streams
// with split(), so results do not depend on scheduling.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Derive a stream for subtask `index` that is stable under scheduling.
  Rng split(uint64_t index) const {
    Rng mix(state_ ^ (0x9e3779b97f4a7c15ull * (index + 1)));
    mix.next();
    return mix;
  }

  // Uniform in [0, bound) for small bound.
  uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

  // Uniform in [lo, hi] inclusive.
  int64_t range(int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

 private:
  uint64_t state_;
};

}  // namespace periods
