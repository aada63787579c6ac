#pragma once

#include <cstdint>

#include "mafia/hash.hpp"

namespace mafia {

// splitmix64 stream. Used for `random(lo:hi)` in expressions and by the
// trace generator. Not std::mt19937 on purpose: distribution results must be
// identical across standard libraries for golden tests to hold.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += kGolden;
    return mix64(state_);
  }

  // Uniform on [lo, hi); returns lo when hi <= lo so expression evaluation
  // never aborts on a degenerate range.
  uint64_t uniform(uint64_t lo, uint64_t hi) {
    if (hi <= lo) return lo;
    return lo + next() % (hi - lo);
  }

  double unit_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace mafia
