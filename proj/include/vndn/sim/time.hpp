#ifndef VNDN_SIM_TIME_HPP
#define VNDN_SIM_TIME_HPP

#include <cstdint>

namespace vndn {

/// Simulation time in integer nanoseconds since run start.
using SimTime = std::int64_t;

namespace time {

inline constexpr SimTime kNsPerUs = 1'000LL;
inline constexpr SimTime kNsPerMs = 1'000'000LL;
inline constexpr SimTime kNsPerS = 1'000'000'000LL;

inline constexpr SimTime
fromUs(std::int64_t us) noexcept
{
  return us * kNsPerUs;
}

inline constexpr SimTime
fromMs(std::int64_t ms) noexcept
{
  return ms * kNsPerMs;
}

inline constexpr SimTime
fromS(std::int64_t s) noexcept
{
  return s * kNsPerS;
}

/// Convert a non-negative second count expressed as a double (e.g. trace
/// timestamps) to nanoseconds, rounding to nearest.
inline constexpr SimTime
fromSeconds(double s) noexcept
{
  return static_cast<SimTime>(s * 1e9 + 0.5);
}

inline constexpr double
toSeconds(SimTime t) noexcept
{
  return static_cast<double>(t) / 1e9;
}

/// Whole-second bin index for per-second aggregation.
inline constexpr std::int64_t
toSecondBin(SimTime t) noexcept
{
  return t / kNsPerS;
}

} // namespace time
} // namespace vndn

#endif // VNDN_SIM_TIME_HPP
