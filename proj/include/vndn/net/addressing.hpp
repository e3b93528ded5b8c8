#ifndef VNDN_NET_ADDRESSING_HPP
#define VNDN_NET_ADDRESSING_HPP

#include "../util/errors.hpp"
#include "frame.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

namespace vndn {

/// 48-bit link (MAC-style) address, stored in the low bits of a u64.
using LinkAddr = std::uint64_t;

inline constexpr LinkAddr
linkAddrOf(NodeId node) noexcept
{
  // Locally administered unicast OUI 02:00:00 + node index.
  return 0x020000000000ULL | node;
}

inline constexpr NodeId
nodeOfLinkAddr(LinkAddr addr) noexcept
{
  return static_cast<NodeId>(addr & 0xffffffffULL);
}

inline std::uint32_t
makeIpv4(std::uint8_t a, std::uint8_t b, std::uint8_t c, std::uint8_t d) noexcept
{
  return (std::uint32_t(a) << 24) | (std::uint32_t(b) << 16) | (std::uint32_t(c) << 8) | d;
}

inline std::string
ipv4ToString(std::uint32_t ip)
{
  return std::to_string(ip >> 24) + "." + std::to_string((ip >> 16) & 0xff) + "." +
         std::to_string((ip >> 8) & 0xff) + "." + std::to_string(ip & 0xff);
}

/// Static IP-to-link-address bindings; resolution is modeled as instantaneous
/// and always successful, so the table must be total before the clock starts.
class AddressTable {
public:
  void
  assign(std::uint32_t ip, LinkAddr link)
  {
    auto [it, inserted] = m_bindings.emplace(ip, link);
    if (!inserted) {
      throw ValidationError("duplicate address assignment for " + ipv4ToString(ip));
    }
  }

  LinkAddr
  resolve(std::uint32_t ip) const
  {
    auto it = m_bindings.find(ip);
    if (it == m_bindings.end()) {
      throw ValidationError("unresolvable IP " + ipv4ToString(ip) + " (setup incomplete)");
    }
    return it->second;
  }

  bool
  contains(std::uint32_t ip) const noexcept
  {
    return m_bindings.count(ip) != 0;
  }

  std::size_t
  size() const noexcept
  {
    return m_bindings.size();
  }

private:
  std::unordered_map<std::uint32_t, LinkAddr> m_bindings;
};

} // namespace vndn

#endif // VNDN_NET_ADDRESSING_HPP
