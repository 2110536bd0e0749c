#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace rrbin {

/// SplitMix64 output function. Bijective on 64-bit words.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives a substream seed from a parent seed and a salt.
///
/// All derived seeds in the library (per replicate, per column pair, per bin
/// in the split tree) go through this function, so results depend only on
/// the base seed and the position of the work item, never on scheduling.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) noexcept
{
  return splitmix64(base ^ splitmix64(salt ^ 0x6a09e667f3bcc909ULL));
}

/// A seeded random stream.
///
/// The engine is std::mt19937_64 (fully specified by the standard), seeded
/// with splitmix64(seed). All variate transforms are implemented here rather
/// than through <random> distributions, whose algorithms are left to the
/// standard library vendor, so draws are identical across platforms.
class Stream {
public:
  explicit Stream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t bits() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform on the open interval (0, 1).
  double uniform_open()
  {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer on [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound)
  {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Normal variate by the Box-Muller transform (one draw per call).
  double normal(double mean = 0.0, double sd = 1.0)
  {
    const double u1 = uniform_open();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
  }

private:
  std::mt19937_64 engine_;
};

} // namespace rrbin
