#ifndef VNDN_NET_P2P_HPP
#define VNDN_NET_P2P_HPP

#include "../sim/scheduler.hpp"
#include "frame.hpp"

#include <cstdint>
#include <functional>
#include <utility>

namespace vndn {

/// Transmission duration of `bytes` at `rateKbps`, in whole nanoseconds,
/// rounded up. Exact in integer arithmetic: ns = ceil(bits * 1e6 / kbps).
inline constexpr SimTime
txDurationNs(std::uint64_t bytes, std::uint64_t rateKbps) noexcept
{
  std::uint64_t bits = bytes * 8;
  return static_cast<SimTime>((bits * 1'000'000ULL + rateKbps - 1) / rateKbps);
}

/// Lossless full-duplex point-to-point link with per-direction serialization
/// and a fixed propagation delay. Frames queue behind the link's busy time in
/// their direction; nothing is ever dropped or corrupted.
class P2pLink {
public:
  using DeliverFn = std::function<void(const Frame&)>;

  P2pLink(Scheduler& sched, NodeId endA, NodeId endB, std::uint64_t rateKbps, SimTime delay)
    : m_sched(sched)
    , m_endA(endA)
    , m_endB(endB)
    , m_rateKbps(rateKbps)
    , m_delay(delay)
  {
  }

  void
  setReceiver(NodeId node, DeliverFn fn)
  {
    (node == m_endA ? m_deliverA : m_deliverB) = std::move(fn);
  }

  /// Send a frame from frame.src toward the other end.
  void
  send(const Frame& frame)
  {
    bool fromA = frame.src == m_endA;
    SimTime& busyUntil = fromA ? m_busyUntilAB : m_busyUntilBA;
    SimTime start = std::max(m_sched.now(), busyUntil);
    SimTime txEnd = start + txDurationNs(frame.bytes, m_rateKbps);
    busyUntil = txEnd;
    DeliverFn& deliver = fromA ? m_deliverB : m_deliverA;
    m_sched.schedule(txEnd + m_delay, [&deliver, frame] {
      if (deliver) {
        deliver(frame);
      }
    });
  }

  NodeId
  peerOf(NodeId node) const noexcept
  {
    return node == m_endA ? m_endB : m_endA;
  }

private:
  Scheduler& m_sched;
  NodeId m_endA;
  NodeId m_endB;
  std::uint64_t m_rateKbps;
  SimTime m_delay;
  SimTime m_busyUntilAB = 0;
  SimTime m_busyUntilBA = 0;
  DeliverFn m_deliverA;
  DeliverFn m_deliverB;
};

} // namespace vndn

#endif // VNDN_NET_P2P_HPP
