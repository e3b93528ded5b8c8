#ifndef VNDN_NDN_PACKET_HPP
#define VNDN_NDN_PACKET_HPP

#include "../sim/time.hpp"
#include "name.hpp"

#include <cstdint>
#include <variant>

namespace vndn {

namespace defaults {
inline constexpr SimTime kInterestLifetime = 4 * time::kNsPerS;
inline constexpr std::uint32_t kPayloadLength = 1024;
} // namespace defaults

struct Interest {
  Name name;
  std::uint32_t nonce = 0;
  SimTime lifetime = defaults::kInterestLifetime;
};

struct Data {
  Name name;
  std::uint32_t payloadLength = defaults::kPayloadLength;
};

using Packet = std::variant<Interest, Data>;

/// Serialized NDN-layer sizes: fixed header plus encoded name (and payload).
inline constexpr std::size_t kInterestHeaderLength = 32;
inline constexpr std::size_t kDataHeaderLength = 48;

inline std::size_t
wireSize(const Interest& i) noexcept
{
  return kInterestHeaderLength + i.name.encodedLength();
}

inline std::size_t
wireSize(const Data& d) noexcept
{
  return kDataHeaderLength + d.name.encodedLength() + d.payloadLength;
}

inline std::size_t
wireSize(const Packet& p) noexcept
{
  return std::holds_alternative<Interest>(p) ? wireSize(std::get<Interest>(p))
                                             : wireSize(std::get<Data>(p));
}

inline const Name&
packetName(const Packet& p) noexcept
{
  return std::holds_alternative<Interest>(p) ? std::get<Interest>(p).name
                                             : std::get<Data>(p).name;
}

} // namespace vndn

#endif // VNDN_NDN_PACKET_HPP
