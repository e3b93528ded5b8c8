#ifndef VNDN_SIM_RNG_HPP
#define VNDN_SIM_RNG_HPP

#include "../util/errors.hpp"
#include "../util/hash.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace vndn {

/// Natural logarithm evaluated with a fixed-order atanh series so that every
/// platform computes bit-identical values (libm log() is not pinned by IEEE).
/// Valid for finite x > 0.
inline double
deterministicLog(double x) noexcept
{
  int exp2 = 0;
  double m = std::frexp(x, &exp2); // m in [0.5, 1)
  // Center the mantissa on 1 so the series argument stays small.
  if (m < 0.70710678118654752440) {
    m *= 2.0;
    exp2 -= 1;
  }
  double s = (m - 1.0) / (m + 1.0); // |s| <= 0.1716
  double s2 = s * s;
  // atanh series: ln(m) = 2s * (1 + s^2/3 + s^4/5 + ...), truncated at s^20/21;
  // the next term is below 1e-18 of the sum, under double precision.
  double sum = 1.0 / 21.0;
  sum = sum * s2 + 1.0 / 19.0;
  sum = sum * s2 + 1.0 / 17.0;
  sum = sum * s2 + 1.0 / 15.0;
  sum = sum * s2 + 1.0 / 13.0;
  sum = sum * s2 + 1.0 / 11.0;
  sum = sum * s2 + 1.0 / 9.0;
  sum = sum * s2 + 1.0 / 7.0;
  sum = sum * s2 + 1.0 / 5.0;
  sum = sum * s2 + 1.0 / 3.0;
  sum = sum * s2 + 1.0;
  constexpr double kLn2 = 0x1.62e42fefa39efp-1;
  return 2.0 * s * sum + static_cast<double>(exp2) * kLn2;
}

/// Counter-based labeled random stream.
///
/// The stream is keyed by (seed, label): state0 = fmix64(fmix64(seed) ^
/// fnv1a64(label)), and each draw advances the counter by the golden-ratio
/// increment before finalizing. Streams with distinct labels are independent,
/// and a (seed, label) pair yields the same sequence on every platform.
class RngStream {
public:
  RngStream(std::uint64_t seed, std::string_view label)
    : m_state(fmix64(fmix64(seed) ^ fnv1a64(label)))
  {
  }

  std::uint64_t
  nextU64() noexcept
  {
    m_state += 0x9e3779b97f4a7c15ULL;
    return fmix64(m_state);
  }

  /// Uniform integer in [lo, hi], both inclusive, via modulo rejection.
  std::int64_t
  uniformInt(std::int64_t lo, std::int64_t hi)
  {
    if (lo > hi) {
      throw ValidationError("uniformInt: empty range [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
    }
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    if (span == 0) { // full 64-bit range
      return static_cast<std::int64_t>(nextU64());
    }
    // Reject draws at or above the largest multiple of span, i.e.
    // u >= 2^64 - (2^64 mod span).
    std::uint64_t rem = (0 - span) % span;
    std::uint64_t u = nextU64();
    while (u > std::numeric_limits<std::uint64_t>::max() - rem) {
      u = nextU64();
    }
    return lo + static_cast<std::int64_t>(u % span);
  }

  /// Uniform real in [a, b) with 53-bit mantissa resolution.
  double
  uniformReal(double a, double b) noexcept
  {
    double r = static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
    return a + r * (b - a);
  }

  /// Normal draw via the Marsaglia polar method; uses deterministicLog so the
  /// result stream is platform independent.
  double
  normal(double mean, double stddev) noexcept
  {
    while (true) {
      double u = uniformReal(-1.0, 1.0);
      double v = uniformReal(-1.0, 1.0);
      double s = u * u + v * v;
      if (s >= 1.0 || s == 0.0) {
        continue;
      }
      double scale = std::sqrt(-2.0 * deterministicLog(s) / s);
      return mean + stddev * (u * scale);
    }
  }

  /// Normal draw rejected until it falls inside [lo, hi].
  double
  truncatedNormal(double mean, double stddev, double lo, double hi)
  {
    if (lo > hi) {
      throw ValidationError("truncatedNormal: empty range");
    }
    while (true) {
      double x = normal(mean, stddev);
      if (x >= lo && x <= hi) {
        return x;
      }
    }
  }

private:
  std::uint64_t m_state;
};

} // namespace vndn

#endif // VNDN_SIM_RNG_HPP
