#ifndef VNDN_UTIL_HASH_HPP
#define VNDN_UTIL_HASH_HPP

#include <cstdint>
#include <string_view>

namespace vndn {

/// 64-bit FNV-1a over a byte string.
inline constexpr std::uint64_t
fnv1a64(std::string_view bytes) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// SplitMix64 finalizer: bijective avalanche mix of a 64-bit word.
inline constexpr std::uint64_t
fmix64(std::uint64_t z) noexcept
{
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

} // namespace vndn

#endif // VNDN_UTIL_HASH_HPP
