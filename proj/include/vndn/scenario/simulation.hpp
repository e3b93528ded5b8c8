#ifndef VNDN_SCENARIO_SIMULATION_HPP
#define VNDN_SCENARIO_SIMULATION_HPP

#include "../apps/apps.hpp"
#include "../mac/wifi.hpp"
#include "../net/p2p.hpp"
#include "../net/stack.hpp"
#include "../net/wire.hpp"
#include "config.hpp"
#include "instance.hpp"
#include "metrics.hpp"

#include <deque>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vndn {

/// Node numbering: 0 = roadside router, 1 = producer behind the wired link,
/// 2..V+1 = vehicles (vehicle id v maps to node v+1).
inline constexpr NodeId kRouterNode = 0;
inline constexpr NodeId kProducerNode = 1;

inline constexpr NodeId
nodeOfVehicle(std::uint32_t vehicleId) noexcept
{
  return vehicleId + 1;
}

/// One complete runnable instance: topology, faces, routes, consumers, and a
/// deterministic event program over a fixed horizon plus a drain window that
/// lets transmit queues empty before counters are frozen.
struct SimulationOptions {
  bool idealChannel = false; // lossless parallel delivery (test oracle hook)
  WifiChannel::LogFn frameLog;
};

class Simulation {
public:
  using Options = SimulationOptions;

  Simulation(InstanceSpec spec, std::vector<VehicleTrace> traces, const RunConfig& cfg,
             std::uint64_t seed, std::uint32_t replication, Options opts = {})
    : m_spec(std::move(spec))
    , m_traces(std::move(traces))
    , m_cfg(cfg)
    , m_seed(seed)
    , m_replication(replication)
    , m_opts(std::move(opts))
    , m_channel(m_sched, cfg.mac)
    , m_p2p(m_sched, kRouterNode, kProducerNode, cfg.p2pRateKbps, time::fromMs(cfg.p2pDelayMs))
    , m_dataPrefix(Name::parse("/data"))
  {
    m_cfg.validate();
    if (m_traces.empty())
      throw ValidationError("simulation requires at least one vehicle");
    for (std::size_t i = 0; i < m_traces.size(); ++i) {
      if (m_traces[i].vehicleId != i + 1)
        throw ValidationError("trace vehicle ids must be 1..N in order");
      if (m_traces[i].ratePps < m_cfg.rateMinPps || m_traces[i].ratePps > m_cfg.rateMaxPps)
        throw ValidationError("trace rate outside configured range");
    }
    assignApps(m_traces, m_spec.mix, m_seed, m_replication);
    buildTopology();
    scheduleWorkload();
  }

  RunMetrics
  run()
  {
    m_sched.runUntil(m_cfg.stopTime());
    finalize();
    return m_metrics;
  }

  const InstanceSpec&
  spec() const noexcept
  {
    return m_spec;
  }

  const std::vector<VehicleTrace>&
  traces() const noexcept
  {
    return m_traces;
  }

  Forwarder&
  forwarderOf(NodeId node)
  {
    return m_stacks[node].forwarder;
  }

private:
  NodeId
  nodeCount() const noexcept
  {
    return static_cast<NodeId>(2 + m_traces.size());
  }

  bool
  hasRadio(NodeId node) const noexcept
  {
    return node != kProducerNode;
  }

  std::size_t
  macIndex(NodeId node) const
  {
    return node == kRouterNode ? 0 : node - 1;
  }

  void
  buildTopology()
  {
    const NodeId nodes = nodeCount();
    m_stacks.reserve(nodes);
    for (NodeId n = 0; n < nodes; ++n)
      m_stacks.emplace_back(n == kRouterNode ? m_cfg.csCapacity : 0);
    m_wifiFace.assign(nodes, 0);

    if (m_spec.deployment == Deployment::kNative)
      buildNative();
    else
      buildOverlay();

    // Radios: the router is up for the whole run; each vehicle's radio comes
    // up at its entry instant and stays attached through the end of the run.
    if (!m_opts.idealChannel) {
      m_macs.resize(1 + m_traces.size());
      for (NodeId n = 0; n < nodes; ++n) {
        if (!hasRadio(n))
          continue;
        m_macs[macIndex(n)] = std::make_unique<WifiMac>(
          m_sched, m_channel, m_cfg.mac, n,
          RngStream(m_seed, "mac-backoff/" + std::to_string(m_replication) + "/node-" +
                              std::to_string(n)));
      }
      m_channel.attach(m_macs[macIndex(kRouterNode)].get());
      m_channel.setDeliver([this](NodeId receiver, const Frame& f) { receiveWireless(receiver, f); });
      if (m_opts.frameLog)
        m_channel.setFrameLog(m_opts.frameLog);
    }
    else {
      m_idealAttached.assign(nodes, false);
      m_idealAttached[kRouterNode] = true;
    }

    m_p2p.setReceiver(kRouterNode, [this](const Frame& f) { receiveP2p(kRouterNode, f); });
    m_p2p.setReceiver(kProducerNode, [this](const Frame& f) { receiveP2p(kProducerNode, f); });

    m_metrics.perVehicle.assign(m_traces.size(), AppTotals{});
    auto bins = static_cast<std::size_t>(m_cfg.horizonS);
    m_metrics.sentPerSecond.assign(bins, 0);
    m_metrics.receivedPerSecond.assign(bins, 0);

    m_cbrPrefix.reserve(m_traces.size());
    for (const VehicleTrace& v : m_traces)
      m_cbrPrefix.push_back(apps::cbrPrefix(v.vehicleId));
    m_emitted.assign(m_traces.size(), 0);
  }

  void
  buildNative()
  {
    NodeStack& router = m_stacks[kRouterNode];
    m_wifiFace[kRouterNode] = router.addNativeWirelessFace();
    m_routerP2pFace = router.addNativeP2pFace(kProducerNode);
    router.forwarder.fib().addRoute(m_dataPrefix, m_routerP2pFace);

    NodeStack& producer = m_stacks[kProducerNode];
    m_producerP2pFace = producer.addNativeP2pFace(kRouterNode);
    FaceId producerApp = producer.addApplicationFace();
    producer.forwarder.fib().addRoute(m_dataPrefix, producerApp);

    for (const VehicleTrace& v : m_traces) {
      NodeStack& veh = m_stacks[nodeOfVehicle(v.vehicleId)];
      FaceId wifi = veh.addNativeWirelessFace();
      m_wifiFace[nodeOfVehicle(v.vehicleId)] = wifi;
      veh.addApplicationFace();
      veh.forwarder.fib().addRoute(Name(), wifi); // default route toward the hotspot
    }
  }

  void
  buildOverlay()
  {
    const std::uint16_t port = 6363;
    const std::uint32_t routerWifiIp = makeIpv4(10, 0, 0, 1);
    const std::uint32_t routerP2pIp = makeIpv4(10, 0, 1, 1);
    const std::uint32_t producerIp = makeIpv4(10, 0, 1, 2);

    m_addresses.assign(routerWifiIp, linkAddrOf(kRouterNode));

    NodeStack& router = m_stacks[kRouterNode];
    m_wifiFace[kRouterNode] = router.addNativeWirelessFace(); // carrier for tunnels
    FaceId routerToProducer = router.addTunnelFace(LinkType::kP2p, kProducerNode,
                                                   {routerP2pIp, port}, {producerIp, port});
    router.forwarder.fib().addRoute(m_dataPrefix, routerToProducer);

    NodeStack& producer = m_stacks[kProducerNode];
    producer.addTunnelFace(LinkType::kP2p, kRouterNode, {producerIp, port}, {routerP2pIp, port});
    FaceId producerApp = producer.addApplicationFace();
    producer.forwarder.fib().addRoute(m_dataPrefix, producerApp);

    for (const VehicleTrace& v : m_traces) {
      NodeId node = nodeOfVehicle(v.vehicleId);
      if (v.vehicleId > 253)
        throw ValidationError("overlay addressing supports at most 253 vehicles");
      std::uint32_t vehIp = makeIpv4(10, 0, 0, static_cast<std::uint8_t>(1 + v.vehicleId));
      m_addresses.assign(vehIp, linkAddrOf(node));

      NodeStack& veh = m_stacks[node];
      m_wifiFace[node] = veh.addNativeWirelessFace(); // carrier only; no route
      FaceId tunnel =
        veh.addTunnelFace(LinkType::kWireless, kRouterNode, {vehIp, port}, {routerWifiIp, port});
      veh.addApplicationFace();
      veh.forwarder.fib().addRoute(Name(), tunnel);

      // Router-side tunnel endpoint toward this vehicle (provisioned up front;
      // tunnel setup is modeled as instantaneous at vehicle entry).
      router.addTunnelFace(LinkType::kWireless, node, {routerWifiIp, port}, {vehIp, port});
    }
  }

  void
  scheduleWorkload()
  {
    // Entry order: radio attach first, then the first emission, so an
    // emission at the entry instant finds the radio already up.
    for (const VehicleTrace& v : m_traces) {
      NodeId node = nodeOfVehicle(v.vehicleId);
      SimTime enter = time::fromSeconds(v.enterS);
      m_sched.schedule(enter, [this, node] {
        if (m_opts.idealChannel)
          m_idealAttached[node] = true;
        else
          m_channel.attach(m_macs[macIndex(node)].get());
      });
    }
    for (std::uint32_t i = 0; i < m_traces.size(); ++i)
      scheduleEmission(i, 0);

    // Periodic PIT housekeeping; expiry itself is exact (checked on access),
    // the sweep just bounds table growth.
    scheduleSweep(time::fromS(1));
  }

  void
  scheduleSweep(SimTime at)
  {
    if (at > m_cfg.stopTime())
      return;
    m_sched.schedule(at, [this, at] {
      for (NodeStack& s : m_stacks)
        s.forwarder.pitExpire(at);
      scheduleSweep(at + time::fromS(1));
    });
  }

  void
  scheduleEmission(std::uint32_t vehIdx, std::uint64_t j)
  {
    const VehicleTrace& v = m_traces[vehIdx];
    SimTime enter = time::fromSeconds(v.enterS);
    SimTime exit = time::fromSeconds(v.exitS);
    SimTime t = apps::emissionTime(enter, j, v.ratePps);
    if (t >= exit)
      return;
    m_sched.schedule(t, [this, vehIdx, j] {
      emitInterest(vehIdx);
      scheduleEmission(vehIdx, j + 1);
    });
  }

  void
  emitInterest(std::uint32_t vehIdx)
  {
    const VehicleTrace& v = m_traces[vehIdx];
    NodeId node = nodeOfVehicle(v.vehicleId);
    SimTime now = m_sched.now();

    std::uint32_t k = m_emitted[vehIdx]++;
    Name name = v.app == AppKind::kModified ? apps::sharedName(now, m_cfg.refHz)
                                            : apps::cbrName(m_cbrPrefix[vehIdx], k);
    // Nonces are unique by construction (vehicle id in the high bits, emission
    // counter in the low bits), so distinct requests are never mistaken for
    // duplicates while same-name aggregation still works.
    std::uint32_t nonce = (v.vehicleId << 20) | (k & 0xfffff);
    Interest interest{std::move(name), nonce, m_cfg.interestLifetime()};

    std::size_t app = appIndex(v.app);
    m_metrics.perApp[app].interestsSent++;
    m_metrics.perVehicle[vehIdx].interestsSent++;
    bumpBin(m_metrics.sentPerSecond, now);

    dispatch(node, m_stacks[node].appFace, Packet(std::move(interest)));
  }

  void
  bumpBin(std::vector<std::uint64_t>& bins, SimTime t)
  {
    auto sec = static_cast<std::size_t>(time::toSecondBin(t));
    bins[std::min(sec, bins.size() - 1)]++;
  }

  // --- packet movement -----------------------------------------------------

  void
  dispatch(NodeId node, FaceId inFace, const Packet& packet)
  {
    std::vector<SendAction>& actions = acquireScratch();
    Forwarder& fwd = m_stacks[node].forwarder;
    if (const auto* i = std::get_if<Interest>(&packet))
      fwd.onInterest(*i, inFace, m_sched.now(), actions);
    else
      fwd.onData(std::get<Data>(packet), inFace, m_sched.now(), actions);
    for (const SendAction& a : actions)
      route(node, a);
    releaseScratch();
  }

  void
  route(NodeId node, const SendAction& action)
  {
    const FaceBinding& b = m_stacks[node].binding(action.face);
    switch (b.kind) {
      case FaceKind::kApplication:
        appReceive(node, action.packet);
        return;
      case FaceKind::kNativeLink: {
        Frame f;
        f.src = node;
        f.dest = kBroadcastNode;
        f.service = WirelessService::kBasicBroadcast;
        f.bytes = static_cast<std::uint32_t>(wireSize(action.packet) + kLinkHeaderLength);
        f.packet = action.packet;
        sendWireless(std::move(f));
        return;
      }
      case FaceKind::kPointToPoint: {
        Frame f;
        f.src = node;
        f.dest = b.remote;
        f.bytes = static_cast<std::uint32_t>(wireSize(action.packet) + kLinkHeaderLength);
        f.packet = action.packet;
        m_p2p.send(std::move(f));
        return;
      }
      case FaceKind::kOverlayTunnel: {
        Frame f;
        f.src = node;
        f.tunneled = true;
        f.tunnelSrc = b.local;
        f.tunnelDst = b.remoteEp;
        f.bytes = static_cast<std::uint32_t>(wireSize(action.packet) + kUdpIpv4HeaderLength +
                                             kLinkHeaderLength);
        f.packet = action.packet;
        if (b.link == LinkType::kWireless) {
          f.dest = nodeOfLinkAddr(m_addresses.resolve(b.remoteEp.ip));
          f.service = WirelessService::kFullRateUnicast;
          sendWireless(std::move(f));
        }
        else {
          f.dest = b.remote;
          m_p2p.send(std::move(f));
        }
        return;
      }
    }
    throw RuntimeFailure("unroutable face kind");
  }

  void
  appReceive(NodeId node, const Packet& packet)
  {
    if (node == kProducerNode) {
      if (const auto* i = std::get_if<Interest>(&packet)) {
        m_metrics.producerInterestsReceived++;
        if (auto d = apps::producerRespond(*i, m_dataPrefix))
          dispatch(kProducerNode, m_stacks[kProducerNode].appFace, Packet(std::move(*d)));
      }
      return;
    }
    // Consumer delivery: count data handed up on a vehicle's app face.
    if (std::holds_alternative<Data>(packet)) {
      std::uint32_t vehIdx = node - 2;
      std::size_t app = appIndex(m_traces[vehIdx].app);
      m_metrics.perApp[app].dataReceived++;
      m_metrics.perVehicle[vehIdx].dataReceived++;
      bumpBin(m_metrics.receivedPerSecond, m_sched.now());
    }
  }

  void
  sendWireless(Frame f)
  {
    if (!m_opts.idealChannel) {
      m_macs[macIndex(f.src)]->enqueue(std::move(f));
      return;
    }
    idealTransmit(std::move(f));
  }

  /// Lossless parallel channel: every frame arrives after its airtime, no
  /// contention, no queueing, no loss. Counters mirror the real MAC so the
  /// conservation identity and purity checks read the same fields.
  void
  idealTransmit(Frame f)
  {
    MacCounters& c = m_idealCounters[f.src];
    c.enqueued++;
    c.txAttempts++;
    c.delivered++;
    if (f.service == WirelessService::kBasicBroadcast)
      m_metrics.wirelessBroadcastFrames++;
    else
      m_metrics.wirelessUnicastFrames++;
    SimTime arrival = m_sched.now() + airtime(f.bytes, f.service, m_cfg.mac);
    if (m_opts.frameLog)
      m_opts.frameLog(FrameLogRecord{arrival, f.src, f.dest, f.service, f.bytes,
                                     FrameOutcome::kDelivered});
    m_sched.schedule(arrival, [this, f = std::move(f)] {
      if (f.dest == kBroadcastNode) {
        for (NodeId n = 0; n < nodeCount(); ++n) {
          if (n != f.src && m_idealAttached[n])
            receiveWireless(n, f);
        }
      }
      else {
        if (!m_idealAttached[f.dest])
          throw RuntimeFailure("ideal channel: unicast to unattached node");
        receiveWireless(f.dest, f);
      }
    });
  }

  void
  receiveWireless(NodeId receiver, const Frame& f)
  {
    FaceId inFace = f.tunneled ? m_stacks[receiver].findTunnel(f.tunnelDst, f.tunnelSrc)
                               : m_wifiFace[receiver];
    dispatch(receiver, inFace, f.packet);
  }

  void
  receiveP2p(NodeId receiver, const Frame& f)
  {
    FaceId inFace;
    if (f.tunneled)
      inFace = m_stacks[receiver].findTunnel(f.tunnelDst, f.tunnelSrc);
    else
      inFace = receiver == kRouterNode ? m_routerP2pFace : m_producerP2pFace;
    dispatch(receiver, inFace, f.packet);
  }

  // --- finalization ---------------------------------------------------------

  void
  finalize()
  {
    if (m_opts.idealChannel) {
      for (const auto& [node, c] : m_idealCounters)
        accumulate(c, 0);
    }
    else {
      for (const auto& mac : m_macs) {
        if (mac)
          accumulate(mac->counters(), mac->residual());
      }
      m_metrics.wirelessBroadcastFrames = m_channel.broadcastFrameCount();
      m_metrics.wirelessUnicastFrames = m_channel.unicastFrameCount();
    }
    m_metrics.router = m_stacks[kRouterNode].forwarder.counters();
  }

  void
  accumulate(const MacCounters& c, std::uint64_t residual)
  {
    m_metrics.mac.enqueued += c.enqueued;
    m_metrics.mac.delivered += c.delivered;
    m_metrics.mac.collided += c.collided;
    m_metrics.mac.queueDropped += c.queueDropped;
    m_metrics.mac.retryExhausted += c.retryExhausted;
    m_metrics.mac.txAttempts += c.txAttempts;
    m_metrics.macResidual += residual;
  }

  // Deque keeps outer dispatch frames' references valid while nested
  // dispatches (e.g. the producer answering through its own forwarder) grow
  // the pool.
  std::vector<SendAction>&
  acquireScratch()
  {
    if (m_scratchDepth == m_scratch.size())
      m_scratch.emplace_back();
    auto& s = m_scratch[m_scratchDepth++];
    s.clear();
    return s;
  }

  void
  releaseScratch()
  {
    --m_scratchDepth;
  }

  InstanceSpec m_spec;
  std::vector<VehicleTrace> m_traces;
  RunConfig m_cfg;
  std::uint64_t m_seed;
  std::uint32_t m_replication;
  Options m_opts;

  Scheduler m_sched;
  WifiChannel m_channel;
  P2pLink m_p2p;
  Name m_dataPrefix;

  std::vector<NodeStack> m_stacks;
  std::vector<std::unique_ptr<WifiMac>> m_macs; // [0]=router, [i]=vehicle i
  std::vector<FaceId> m_wifiFace;
  FaceId m_routerP2pFace = 0;
  FaceId m_producerP2pFace = 0;
  AddressTable m_addresses;

  std::vector<Name> m_cbrPrefix;
  std::vector<std::uint32_t> m_emitted;

  std::vector<bool> m_idealAttached;
  std::map<NodeId, MacCounters> m_idealCounters;

  std::deque<std::vector<SendAction>> m_scratch;
  std::size_t m_scratchDepth = 0;

  RunMetrics m_metrics;
};

} // namespace vndn

#endif // VNDN_SCENARIO_SIMULATION_HPP
