#include "vndn/net/addressing.hpp"
#include "vndn/net/p2p.hpp"
#include "vndn/net/stack.hpp"
#include "vndn/net/wire.hpp"

#include <gtest/gtest.h>

namespace vndn {
namespace tests {

TEST(Wire, InterestEncodesToStatedSizeAndRoundTrips)
{
  Interest i{Name::parse("/data/veh-1/0"), 0xdeadbeef, 4 * time::kNsPerS};
  auto bytes = encodePacket(i);
  EXPECT_EQ(bytes.size(), 45u); // 32 header + 13 name
  EXPECT_EQ(bytes.size(), wireSize(i));

  Packet back = decodePacket(bytes);
  ASSERT_TRUE(std::holds_alternative<Interest>(back));
  const Interest& j = std::get<Interest>(back);
  EXPECT_EQ(j.name, i.name);
  EXPECT_EQ(j.nonce, i.nonce);
  EXPECT_EQ(j.lifetime, i.lifetime);
  EXPECT_EQ(encodePacket(back), bytes); // byte-exact round trip
}

TEST(Wire, DataEncodesToStatedSizeAndRoundTrips)
{
  Data d{Name::parse("/data/veh-1/0"), 1024};
  auto bytes = encodePacket(d);
  EXPECT_EQ(bytes.size(), 1085u); // 48 + 13 + 1024
  Packet back = decodePacket(bytes);
  ASSERT_TRUE(std::holds_alternative<Data>(back));
  EXPECT_EQ(std::get<Data>(back).name, d.name);
  EXPECT_EQ(std::get<Data>(back).payloadLength, 1024u);
  EXPECT_EQ(encodePacket(back), bytes);
}

TEST(Wire, DecodeRejectsMalformedInput)
{
  Interest i{Name::parse("/data/x"), 7, 4 * time::kNsPerS};
  auto good = encodePacket(i);

  auto truncated = good;
  truncated.resize(good.size() - 3);
  EXPECT_THROW(decodePacket(truncated), ValidationError);

  auto badMagic = good;
  badMagic[0] = 'X';
  EXPECT_THROW(decodePacket(badMagic), ValidationError);

  auto badLen = good;
  badLen[16] += 1; // name length field
  EXPECT_THROW(decodePacket(badLen), ValidationError);

  EXPECT_THROW(decodePacket({}), ValidationError);
}

TEST(Wire, UdpEncapsulationAdds28BytesAndRoundTrips)
{
  Data d{Name::parse("/data/veh-1/0"), 1024};
  auto inner = encodePacket(d);
  Ipv4Endpoint src{makeIpv4(10, 0, 0, 5), 6363};
  Ipv4Endpoint dst{makeIpv4(10, 0, 0, 1), 6363};
  auto outer = encapsulateUdpIpv4(inner, src, dst);
  EXPECT_EQ(outer.size(), inner.size() + kUdpIpv4HeaderLength);

  UdpDatagram dg = decapsulateUdpIpv4(outer);
  EXPECT_EQ(dg.src, src);
  EXPECT_EQ(dg.dst, dst);
  EXPECT_EQ(dg.payload, inner); // byte-exact
}

TEST(Wire, OverlayMinusNativeOverheadIs28)
{
  // Identical NDN packet on the wireless hop, both deployments.
  Interest i{Name::parse("/data/veh-1/0"), 1, 4 * time::kNsPerS};
  Data d{Name::parse("/data/veh-1/0"), 1024};
  std::size_t nativeInterest = wireSize(i) + kLinkHeaderLength;
  std::size_t overlayInterest = wireSize(i) + kUdpIpv4HeaderLength + kLinkHeaderLength;
  std::size_t nativeData = wireSize(d) + kLinkHeaderLength;
  std::size_t overlayData = wireSize(d) + kUdpIpv4HeaderLength + kLinkHeaderLength;
  EXPECT_EQ(nativeInterest, 81u);
  EXPECT_EQ(overlayInterest, 109u);
  EXPECT_EQ(nativeData, 1121u);
  EXPECT_EQ(overlayData, 1149u);
  EXPECT_EQ(overlayInterest - nativeInterest, 28u);
  EXPECT_EQ(overlayData - nativeData, 28u);
}

TEST(Addressing, TableAssignsResolvesAndRejectsDuplicates)
{
  AddressTable table;
  table.assign(makeIpv4(10, 0, 0, 1), linkAddrOf(0));
  table.assign(makeIpv4(10, 0, 0, 2), linkAddrOf(2));
  EXPECT_EQ(table.resolve(makeIpv4(10, 0, 0, 1)), linkAddrOf(0));
  EXPECT_EQ(table.resolve(makeIpv4(10, 0, 0, 2)), linkAddrOf(2));
  EXPECT_THROW(table.assign(makeIpv4(10, 0, 0, 1), linkAddrOf(9)), ValidationError);
  EXPECT_THROW(table.resolve(makeIpv4(10, 0, 9, 9)), ValidationError);
  EXPECT_EQ(ipv4ToString(makeIpv4(10, 0, 0, 1)), "10.0.0.1");
}

TEST(P2pLink, SerializationPlusFixedDelay)
{
  Scheduler sched;
  P2pLink link(sched, 0, 1, 1'000'000 /* 1 Gb/s in kbps */, time::fromMs(30));
  std::vector<std::pair<SimTime, std::uint32_t>> got;
  link.setReceiver(1, [&](const Frame& f) { got.emplace_back(sched.now(), f.bytes); });

  Frame f;
  f.src = 0;
  f.dest = 1;
  f.bytes = 1121;
  f.packet = Data{Name::parse("/data/veh-1/0"), 1024};
  link.send(f);
  link.send(f); // queues behind the first: serialization is per-direction
  sched.runUntil(time::fromS(1));

  ASSERT_EQ(got.size(), 2u);
  EXPECT_EQ(got[0].first, 8'968 + 30'000'000); // 1121*8 bits at 1 Gb/s + 30 ms
  EXPECT_EQ(got[1].first, 2 * 8'968 + 30'000'000);
}

TEST(P2pLink, DirectionsAreIndependent)
{
  Scheduler sched;
  P2pLink link(sched, 0, 1, 1'000'000, time::fromMs(30));
  std::vector<SimTime> at0, at1;
  link.setReceiver(0, [&](const Frame&) { at0.push_back(sched.now()); });
  link.setReceiver(1, [&](const Frame&) { at1.push_back(sched.now()); });

  Frame a;
  a.src = 0;
  a.dest = 1;
  a.bytes = 1121;
  a.packet = Data{Name::parse("/x"), 1024};
  Frame b = a;
  b.src = 1;
  b.dest = 0;
  link.send(a);
  link.send(b);
  sched.runUntil(time::fromS(1));
  ASSERT_EQ(at0.size(), 1u);
  ASSERT_EQ(at1.size(), 1u);
  EXPECT_EQ(at0[0], at1[0]); // no cross-direction queueing
}

TEST(NodeStack, TunnelFacesAreUniquePerEndpointPair)
{
  NodeStack stack;
  Ipv4Endpoint local{makeIpv4(10, 0, 0, 2), 6363};
  Ipv4Endpoint remote{makeIpv4(10, 0, 0, 1), 6363};
  FaceId t = stack.addTunnelFace(LinkType::kWireless, 0, local, remote);
  EXPECT_EQ(stack.findTunnel(local, remote), t);
  EXPECT_THROW(stack.addTunnelFace(LinkType::kWireless, 0, local, remote), ValidationError);
  EXPECT_THROW(stack.findTunnel(remote, local), ValidationError); // unknown pair

  Ipv4Endpoint local2{makeIpv4(10, 0, 0, 2), 6364};
  EXPECT_NE(stack.addTunnelFace(LinkType::kWireless, 0, local2, remote), t);
}

TEST(NodeStack, BindingsTrackFaceKinds)
{
  NodeStack stack;
  FaceId app = stack.addApplicationFace();
  FaceId wifi = stack.addNativeWirelessFace();
  FaceId p2p = stack.addNativeP2pFace(1);
  EXPECT_EQ(stack.binding(app).kind, FaceKind::kApplication);
  EXPECT_EQ(stack.binding(wifi).kind, FaceKind::kNativeLink);
  EXPECT_EQ(stack.binding(wifi).remote, kBroadcastNode);
  EXPECT_EQ(stack.binding(p2p).kind, FaceKind::kPointToPoint);
  EXPECT_EQ(stack.binding(p2p).remote, 1u);
  EXPECT_EQ(stack.appFace, app);
}

} // namespace tests
} // namespace vndn
