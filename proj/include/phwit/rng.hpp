#pragma once

#include <cmath>
#include <cstdint>

namespace phwit {

/// Counter-based pseudo-random generator (SplitMix64 sequence).
///
/// Every output is a pure function of (key, counter), so draws are
/// reproducible from the seed alone and independent of evaluation order:
///
///   mix(x):  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9
///            x = (x ^ (x >> 27)) * 0x94D049BB133111EB
///            return x ^ (x >> 31)
///   output n (n = 1, 2, ...):  mix(key + n * 0x9E3779B97F4A7C15)
///
/// Derived quantities:
///   fork(id):      independent stream with key' = mix(key ^ mix(id + GAMMA))
///   uniform01():   (next_u64() >> 11) * 2^-53, in [0, 1)
///   normal():      Box-Muller on two uniforms; the second variate is cached
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : key_(seed) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  std::uint64_t key() const { return key_; }

  /// Independent substream; depends only on (key, id), not on draws so far.
  Rng fork(std::uint64_t id) const { return Rng(mix(key_ ^ mix(id + kGamma))); }

  /// Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * kInv53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  static std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  static constexpr double kPi = 3.14159265358979323846;

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace phwit
