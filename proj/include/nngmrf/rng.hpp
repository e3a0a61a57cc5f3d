#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace nngmrf {

// SplitMix64 finalizer (Steele, Lea & Flood / Vigna's fixed-increment variant).
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Collapses (seed, stream) into a single seed usable by any sampler below.
// Replicate r of a Monte-Carlo run draws from derive_seed(seed, r) and is
// independent of how replicates are scheduled across threads.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
  return mix64(mix64(seed + 0x9E3779B97F4A7C15ULL) ^ mix64(stream + 0x94D049BB133111EBULL));
}

// Splittable pseudo-random stream with 64-bit state (SplitMix64 sequence).
// All derived variates are produced by explicit formulas, so the sequence is
// bit-reproducible across platforms for a fixed (seed, stream).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : state_(derive_seed(seed, stream)) {}

  std::uint64_t next_u64() noexcept {
    return mix64(state_ += 0x9E3779B97F4A7C15ULL);
  }

  // Uniform on the open interval (0, 1).
  double uniform() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform on (lo, hi).
  double uniform(double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform();
  }

  double exponential() noexcept { return -std::log(uniform()); }

  // Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal() noexcept {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double radius = std::sqrt(-2.0 * std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

  // Poisson count as the number of unit-exponential arrivals before `mean`.
  // Exact for any mean; O(mean) draws, which is fine at desk scale.
  std::uint64_t poisson(double mean) {
    if (!(mean > 0.0)) throw std::invalid_argument("poisson: mean must be positive");
    std::uint64_t count = 0;
    double arrival = exponential();
    while (arrival <= mean) {
      ++count;
      arrival += exponential();
    }
    return count;
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace nngmrf
