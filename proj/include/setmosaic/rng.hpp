#pragma once

#include <cstdint>

namespace setmosaic {

// SplitMix64 (Steele, Lea & Flood; constants from Vigna's reference
// implementation). Chosen over std::mt19937 because outputs must be
// reproducible across implementations and platforms, not just across runs.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform draw in [0, bound). Modulo bias is irrelevant here: draws only
  // pick labels and shuffle small arrays, and portability is what matters.
  std::uint64_t bounded(std::uint64_t bound) { return next() % bound; }

  // Independent child stream for item `index`, so per-question seeds do not
  // depend on how many draws earlier questions consumed.
  static SplitMix64 child(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 parent(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
    return SplitMix64(parent.next());
  }

private:
  std::uint64_t state_;
};

}  // namespace setmosaic
