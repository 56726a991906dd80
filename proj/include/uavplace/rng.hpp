// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace uavp {

// splitmix64 (Steele, Lea, Flood). Used only to derive independent stream
// seeds from one master seed: stream k gets the (k+1)-th output. Mixing here
// keeps numerically close master seeds from producing correlated engines.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream) {
  SplitMix64 sm(master_seed);
  std::uint64_t s = 0;
  for (std::uint64_t i = 0; i <= stream; ++i) s = sm.next();
  return s;
}

// Deterministic uniform stream. The raw mt19937_64 output sequence is fully
// specified by the standard and the [0,1) conversion is explicit, so results
// are identical across platforms (std::uniform_real_distribution is not).
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Uniform index in [0, n). Requires n >= 1.
  std::size_t index(std::size_t n) {
    const auto i = static_cast<std::size_t>(u01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace uavp
