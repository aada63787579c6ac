#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace mafia {

// The hash family used everywhere (flow keys, sketch rows, Bloom positions,
// hash-map slots) is a seeded multiply-xor-shift mixer. It is part of the
// on-disk/reproducibility contract: state dumps, sink files and golden tests
// all depend on it, so the constants below are fixed forever.
//
//   mix64(x):  x ^= x>>30; x *= 0xbf58476d1ce4e5b9; x ^= x>>27;
//              x *= 0x94d049bb133111eb; x ^= x>>31
//   hash(seed, v0..vn) = fold of mix64(h ^ (v_i + GOLDEN)) starting from
//                        mix64(seed ^ (0x2545f4914f6cdd1d + n+1))
//
// Seed hierarchy:
//   var_seed(run, name) = mix64(run ^ fnv1a64(name))
//   row_seed(vs, i)     = mix64(vs + GOLDEN * (i + 1))
//   index_seed(vs)      = mix64(vs ^ 0xa5a5a5a5a5a5a5a5)   (hash-map slots)

inline constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

constexpr uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

constexpr uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr uint64_t var_seed(uint64_t run_seed, std::string_view var) {
  return mix64(run_seed ^ fnv1a64(var));
}

constexpr uint64_t row_seed(uint64_t vseed, uint32_t row) {
  return mix64(vseed + kGolden * (static_cast<uint64_t>(row) + 1));
}

constexpr uint64_t index_seed(uint64_t vseed) {
  return mix64(vseed ^ 0xa5a5a5a5a5a5a5a5ULL);
}

inline uint64_t hash_values(uint64_t seed, std::span<const uint64_t> vals) {
  uint64_t h = mix64(seed ^ (0x2545f4914f6cdd1dULL + vals.size() + 1));
  for (uint64_t v : vals) h = mix64(h ^ (v + kGolden));
  return h;
}

}  // namespace mafia
