#pragma once

#include <cstdint>

namespace nilcat {

/// splitmix64; fixed algorithm so sampled characteristic sequences are
/// reproducible across platforms and standard libraries.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] (tiny ranges only).
  int range(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }

private:
  std::uint64_t state_;
};

}  // namespace nilcat
