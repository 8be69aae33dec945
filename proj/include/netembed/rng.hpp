#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace netembed {

// Counter-based splittable random generator. Every random decision in the
// toolkit flows from a single 64-bit seed through (seed, stream-label)
// derivations, so replications and worker threads get independent streams
// that do not depend on scheduling. Output is the SplitMix64 finalizer
// applied to key + counter * gamma; splitting re-keys with a hashed label.
// Bit-reproducible across platforms (no libm, no std::distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(mix(seed + kGamma)) {}

  // Independent stream derived from this stream's key and a label.
  // Does not advance this generator.
  Rng split(std::uint64_t label) const {
    return Rng(key_ + mix(label + kGamma));
  }
  Rng split(std::string_view label) const { return split(fnv1a(label)); }

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  // Uniform on [0, 1) with 53 random bits.
  double next_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., bound-1}, unbiased via rejection. bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_real();
  }

  // Box-Muller; consumes two uniforms per call.
  double next_gaussian();

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  static std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ull;
    }
    return h;
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace netembed
