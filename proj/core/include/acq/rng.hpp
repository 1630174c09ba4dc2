#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace acq {

// Deterministic generator used everywhere a seed is accepted.
//
// The engine is std::mt19937_64 seeded with the raw 64-bit seed; its output
// sequence is fixed by the C++ standard. The conversions below are ours (the
// standard distributions are implementation-defined), so every draw is
// reproducible across platforms:
//   uniform01()        = (x >> 11) * 2^-53, in [0, 1)
//   uniform_below(b)   = x % b after rejecting x < (2^64 - b) % b
//   shuffle(v)         = Fisher-Yates from the back, j = uniform_below(i + 1)
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % bound;
    }
  }

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive independent sub-seeds from one seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace acq
