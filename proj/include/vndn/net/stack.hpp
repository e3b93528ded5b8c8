#ifndef VNDN_NET_STACK_HPP
#define VNDN_NET_STACK_HPP

#include "../ndn/forwarder.hpp"
#include "addressing.hpp"
#include "frame.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace vndn {

/// Which transport carries a face's traffic.
enum class LinkType : std::uint8_t {
  kNone,     // application faces
  kWireless, // the shared Wi-Fi channel
  kP2p,      // the wired router-producer link
};

struct FaceBinding {
  FaceKind kind = FaceKind::kApplication;
  LinkType link = LinkType::kNone;
  NodeId remote = kBroadcastNode; // peer node (unicast/tunnel/p2p)
  Ipv4Endpoint local{};           // overlay tunnels only
  Ipv4Endpoint remoteEp{};
};

struct TunnelKey {
  std::uint32_t localIp = 0;
  std::uint16_t localPort = 0;
  std::uint32_t remoteIp = 0;
  std::uint16_t remotePort = 0;

  friend bool
  operator==(const TunnelKey& a, const TunnelKey& b) noexcept
  {
    return a.localIp == b.localIp && a.localPort == b.localPort && a.remoteIp == b.remoteIp &&
           a.remotePort == b.remotePort;
  }
};

struct TunnelKeyHash {
  std::size_t
  operator()(const TunnelKey& k) const noexcept
  {
    std::uint64_t x = (std::uint64_t(k.localIp) << 32) ^ k.remoteIp;
    std::uint64_t y = (std::uint64_t(k.localPort) << 16) ^ k.remotePort;
    return static_cast<std::size_t>(fmix64(x ^ (y << 1)));
  }
};

/// One node's forwarder plus the transport bindings of its faces.
struct NodeStack {
  Forwarder forwarder;
  std::vector<FaceBinding> bindings; // index faceId-1
  std::unordered_map<TunnelKey, FaceId, TunnelKeyHash> tunnelIndex;
  FaceId appFace = 0;

  explicit NodeStack(std::size_t csCapacity = 0)
    : forwarder(csCapacity)
  {
  }

  const FaceBinding&
  binding(FaceId id) const
  {
    return bindings.at(id - 1);
  }

  FaceId
  addApplicationFace()
  {
    FaceId id = forwarder.addFace(FaceKind::kApplication);
    bindings.push_back(FaceBinding{FaceKind::kApplication, LinkType::kNone, kBroadcastNode, {}, {}});
    appFace = id;
    return id;
  }

  /// Native face over the shared wireless channel: sends are broadcast.
  FaceId
  addNativeWirelessFace()
  {
    FaceId id = forwarder.addFace(FaceKind::kNativeLink);
    bindings.push_back(
      FaceBinding{FaceKind::kNativeLink, LinkType::kWireless, kBroadcastNode, {}, {}});
    return id;
  }

  /// Native face over the wired point-to-point link toward `peer`.
  FaceId
  addNativeP2pFace(NodeId peer)
  {
    FaceId id = forwarder.addFace(FaceKind::kPointToPoint);
    bindings.push_back(FaceBinding{FaceKind::kPointToPoint, LinkType::kP2p, peer, {}, {}});
    return id;
  }

  /// UDP tunnel face; one tunnel per (local, remote) endpoint pair.
  FaceId
  addTunnelFace(LinkType link, NodeId remoteNode, Ipv4Endpoint local, Ipv4Endpoint remote)
  {
    TunnelKey key{local.ip, local.port, remote.ip, remote.port};
    if (tunnelIndex.count(key) != 0) {
      throw ValidationError("duplicate tunnel for endpoint pair");
    }
    FaceId id = forwarder.addFace(FaceKind::kOverlayTunnel);
    bindings.push_back(FaceBinding{FaceKind::kOverlayTunnel, link, remoteNode, local, remote});
    tunnelIndex.emplace(key, id);
    return id;
  }

  /// Find the tunnel face on which a datagram with these endpoints arrives.
  FaceId
  findTunnel(Ipv4Endpoint local, Ipv4Endpoint remote) const
  {
    TunnelKey key{local.ip, local.port, remote.ip, remote.port};
    auto it = tunnelIndex.find(key);
    if (it == tunnelIndex.end()) {
      throw ValidationError("datagram for unknown tunnel endpoint pair");
    }
    return it->second;
  }
};

} // namespace vndn

#endif // VNDN_NET_STACK_HPP
