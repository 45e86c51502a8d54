#pragma once

#include <cstdint>
#include <random>

namespace spcap {

// Deterministic RNG used everywhere randomness is needed. The uniform
// draws are implemented by hand instead of <random> distributions so that
// the byte stream does not depend on the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform in [0,1)
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // uniform in [lo,hi)
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // uniform integer in [0,n)
  int next_int(int n) {
    return static_cast<int>(next_double() * n) % n;
  }

  // derive an independent stream, e.g. one per ant
  static std::uint64_t split(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step on the combined value
    std::uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace spcap
