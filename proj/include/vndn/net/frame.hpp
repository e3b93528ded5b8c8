#ifndef VNDN_NET_FRAME_HPP
#define VNDN_NET_FRAME_HPP

#include "../ndn/packet.hpp"

#include <cstdint>

namespace vndn {

using NodeId = std::uint32_t;

inline constexpr NodeId kBroadcastNode = 0xffffffffu;

/// Per-packet link overheads in bytes.
inline constexpr std::size_t kLinkHeaderLength = 36;    // 24 MAC + 8 LLC + 4 FCS
inline constexpr std::size_t kUdpIpv4HeaderLength = 28; // 20 IPv4 + 8 UDP

enum class WirelessService : std::uint8_t {
  kBasicBroadcast,  // mandatory low-rate mode, no ACK, no retry
  kFullRateUnicast, // MCS-11 rate with ACK + retransmission
};

struct Ipv4Endpoint {
  std::uint32_t ip = 0;
  std::uint16_t port = 0;

  friend bool
  operator==(const Ipv4Endpoint& a, const Ipv4Endpoint& b) noexcept
  {
    return a.ip == b.ip && a.port == b.port;
  }
};

/// A link-layer transmission unit. The NDN packet rides along in decoded form
/// (byte codecs are exercised separately); `bytes` is the full on-air size
/// including NDN wire size, any UDP/IPv4 encapsulation, and the link header.
struct Frame {
  NodeId src = 0;
  NodeId dest = kBroadcastNode;
  WirelessService service = WirelessService::kBasicBroadcast;
  std::uint32_t bytes = 0;
  Packet packet;
  bool tunneled = false;
  Ipv4Endpoint tunnelSrc{};
  Ipv4Endpoint tunnelDst{};
};

} // namespace vndn

#endif // VNDN_NET_FRAME_HPP
