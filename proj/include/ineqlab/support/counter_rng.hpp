#pragma once

#include <cmath>
#include <cstdint>

namespace ineqlab::numeric {

/// Counter-based generator: the i-th draw of a stream is the SplitMix64
/// finalizer applied to seed + (i + 1) * 0x9E3779B97F4A7C15 (mod 2^64).
///
/// Every draw depends only on (seed, stream, index), so a sample set of size
/// n is a prefix of the set of size n + 1, results do not depend on the order
/// in which workers evaluate samples, and the sequence is reproducible in any
/// language that has 64-bit unsigned wrap-around arithmetic.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(seed ^ mix(stream + kGolden)) {}

  [[nodiscard]] static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  [[nodiscard]] constexpr std::uint64_t bits(std::uint64_t index) const {
    return mix(key_ + (index + 1) * kGolden);
  }

  /// Uniform in [0, 1) with 53 random bits.
  [[nodiscard]] constexpr double uniform(std::uint64_t index) const {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
  }

  [[nodiscard]] double uniform(std::uint64_t index, double lo, double hi) const {
    return lo + (hi - lo) * uniform(index);
  }

  /// Log-uniform in [lo, hi]; both ends must be positive.
  [[nodiscard]] double log_uniform(std::uint64_t index, double lo, double hi) const {
    const double a = std::log(lo);
    const double b = std::log(hi);
    return std::exp(a + (b - a) * uniform(index));
  }

 private:
  std::uint64_t key_;
};

}  // namespace ineqlab::numeric
