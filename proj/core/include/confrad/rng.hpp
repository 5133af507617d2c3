#pragma once

#include <cstdint>

namespace confrad {

// splitmix64: tiny, fully specified generator. Every stream the toolkit
// uses derives from a root seed through derive_seed, so runs are
// reproducible across platforms and toolchains (no std::distribution
// involvement anywhere).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double log_uniform(double lo, double hi);

  // standard normal (Box-Muller)
  double normal();

 private:
  std::uint64_t state_;
};

std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream);

}  // namespace confrad
