#ifndef NETBAND_RNG_HPP
#define NETBAND_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace netband {

/// SplitMix64 finalizer. Used for deriving child seeds; never used as the
/// sampling engine itself.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Child-seed derivation rule, shared by every component that splits a
/// random stream: fold each path element through mix64.
///
///   child = mix64(base); for e in path: child = mix64(child ^ mix64(e))
///
/// The rule makes generated values a pure function of (base, path), so
/// replicates and matrix entries can be produced in any order, or in
/// parallel, without changing a single draw.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(base);
  for (std::uint64_t e : path) h = mix64(h ^ mix64(e));
  return h;
}

/// Stream roles used by the experiment harness when deriving per-replicate
/// seeds: child = derive_seed(base_seed, {replicate, role}).
enum SeedRole : std::uint64_t {
  kSeedRoleInstance = 1,
  kSeedRoleNoise = 2,
  kSeedRolePolicy = 3,
};

/// Seeded random stream with portable output.
///
/// The engine is std::mt19937_64 (bit-exact across platforms by the
/// standard); all distributions are implemented here instead of using
/// std::*_distribution, whose output is implementation-defined. One
/// value is consumed from the engine per uniform draw; normal() uses the
/// polar method and caches the second deviate.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform on {-1, +1}.
  double rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

  /// Standard normal deviate (Marsaglia polar method).
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = uniform(-1.0, 1.0);
      v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace netband

#endif  // NETBAND_RNG_HPP
