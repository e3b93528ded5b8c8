#ifndef VNDN_MAC_WIFI_HPP
#define VNDN_MAC_WIFI_HPP

#include "../net/frame.hpp"
#include "../net/p2p.hpp"
#include "../sim/rng.hpp"
#include "../sim/scheduler.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <string>
#include <vector>

namespace vndn {

/// DCF timing and rate constants. Defaults follow common 5 GHz OFDM values;
/// the two data rates model the mandatory basic (broadcast) service and the
/// fixed MCS-11 / 800 ns GI unicast service on a 20 MHz, 1-stream channel.
struct MacParams {
  SimTime slot = time::fromUs(9);
  SimTime sifs = time::fromUs(16);
  SimTime difs = time::fromUs(34);
  SimTime preambleBasic = time::fromUs(20);
  SimTime preambleFull = time::fromUs(40);
  SimTime ackDuration = time::fromUs(44);
  std::uint32_t cwMin = 15;
  std::uint32_t cwMax = 1023;
  std::uint32_t retryLimit = 7;
  std::uint64_t basicRateKbps = 6'000;
  std::uint64_t fullRateKbps = 143'400;
  std::size_t queueCap = 1000;

  void
  validate() const
  {
    if (slot <= 0 || sifs <= 0 || difs <= 0 || preambleBasic <= 0 || preambleFull <= 0 ||
        ackDuration <= 0) {
      throw ValidationError("mac: timing constants must be positive");
    }
    if (cwMin > cwMax) {
      throw ValidationError("mac: cw_min must not exceed cw_max");
    }
    if (basicRateKbps == 0 || fullRateKbps == 0) {
      throw ValidationError("mac: rates must be positive");
    }
    if (queueCap == 0) {
      throw ValidationError("mac: queue capacity must be positive");
    }
  }
};

/// On-air duration of a frame: preamble plus payload bits at the service rate,
/// in integer nanoseconds rounded up.
inline SimTime
airtime(std::uint32_t bytes, WirelessService service, const MacParams& params)
{
  if (service == WirelessService::kBasicBroadcast) {
    return params.preambleBasic + txDurationNs(bytes, params.basicRateKbps);
  }
  return params.preambleFull + txDurationNs(bytes, params.fullRateKbps);
}

enum class FrameOutcome : std::uint8_t {
  kDelivered,
  kCollided,       // broadcast lost to overlap (single attempt, no retry)
  kQueueDropped,   // transmit queue overflow
  kRetryExhausted, // unicast gave up after retry_limit retransmissions
};

inline const char*
toString(FrameOutcome o) noexcept
{
  switch (o) {
    case FrameOutcome::kDelivered:
      return "delivered";
    case FrameOutcome::kCollided:
      return "collided";
    case FrameOutcome::kQueueDropped:
      return "queue-drop";
    case FrameOutcome::kRetryExhausted:
      return "retry-drop";
  }
  return "?";
}

/// One record per frame, written when its final outcome is known. ACK frames
/// are MAC control traffic (never carry NDN packets) and are not logged.
struct FrameLogRecord {
  SimTime time;
  NodeId src;
  NodeId dest;
  WirelessService service;
  std::uint32_t bytes;
  FrameOutcome outcome;
};

struct MacCounters {
  std::uint64_t enqueued = 0;
  std::uint64_t delivered = 0;
  std::uint64_t collided = 0;
  std::uint64_t queueDropped = 0;
  std::uint64_t retryExhausted = 0;
  std::uint64_t txAttempts = 0; // diagnostics; retries count individually
};

class WifiChannel;

/// Per-node DCF transmitter: FIFO queue, DIFS + uniform[0, CW] slotted
/// backoff (frozen while the channel is busy), single-attempt broadcast,
/// ACKed unicast with binary exponential backoff up to retry_limit.
class WifiMac {
public:
  WifiMac(Scheduler& sched, WifiChannel& channel, const MacParams& params, NodeId node,
          RngStream backoffRng)
    : m_sched(sched)
    , m_channel(channel)
    , m_params(params)
    , m_node(node)
    , m_backoff(std::move(backoffRng))
  {
  }

  void
  enqueue(Frame frame);

  NodeId
  node() const noexcept
  {
    return m_node;
  }

  const MacCounters&
  counters() const noexcept
  {
    return m_counters;
  }

  std::size_t
  queueDepth() const noexcept
  {
    return m_queue.size();
  }

  /// Frames still queued or in flight at teardown; they are neither delivered
  /// nor dropped by the MAC itself, so the owner folds them into its drop
  /// accounting to keep the conservation identity exact.
  std::uint64_t
  residual() const noexcept
  {
    return m_queue.size();
  }

  // --- channel-driven interface below ---

  /// A transmission started at `busyStart`: pause the countdown, consuming
  /// whole elapsed slots. A countdown expiring exactly at `busyStart` is left
  /// to fire (both stations transmit: that is the collision case).
  void
  freezeForBusy(SimTime busyStart)
  {
    if (!m_counting || m_expiryAt == busyStart) {
      return;
    }
    if (busyStart > m_slotBase) {
      std::uint64_t consumed = static_cast<std::uint64_t>((busyStart - m_slotBase) / m_params.slot);
      m_remainingSlots -= std::min(m_remainingSlots, consumed);
    }
    m_sched.cancel(m_expiryEvent);
    m_counting = false;
  }

  /// Channel went idle at `idleStart`: resume DIFS + remaining backoff.
  void
  resumeCountdown(SimTime idleStart)
  {
    if (m_counting) {
      return;
    }
    m_slotBase = idleStart + m_params.difs;
    m_expiryAt = m_slotBase + static_cast<SimTime>(m_remainingSlots) * m_params.slot;
    m_expiryEvent = m_sched.schedule(m_expiryAt, [this] { onBackoffExpiry(); });
    m_counting = true;
  }

  bool
  isCounting() const noexcept
  {
    return m_counting;
  }

  const Frame&
  headFrame() const
  {
    return m_queue.front();
  }

  void
  onBroadcastTxEnd(bool corrupted)
  {
    if (corrupted) {
      ++m_counters.collided;
    }
    else {
      ++m_counters.delivered;
    }
    popAndContinue();
  }

  bool
  retryBudgetSpent() const noexcept
  {
    return m_attempts >= 1 + m_params.retryLimit;
  }

  /// Corrupted unicast with retries left: double CW (capped) and recontend.
  void
  retryHead()
  {
    m_cw = std::min(2 * m_cw + 1, m_params.cwMax);
    startBackoff();
  }

  /// Corrupted unicast with the retry budget spent: drop the frame.
  void
  abandonHead()
  {
    ++m_counters.retryExhausted;
    popAndContinue();
  }

  void
  onAckComplete()
  {
    ++m_counters.delivered;
    popAndContinue();
  }

private:
  void
  beginContention()
  {
    m_cw = m_params.cwMin;
    m_attempts = 0;
    startBackoff();
  }

  void
  startBackoff();

  void
  onBackoffExpiry();

  void
  popAndContinue()
  {
    m_queue.pop_front();
    if (!m_queue.empty()) {
      beginContention();
    }
    else {
      m_busy = false;
    }
  }

  Scheduler& m_sched;
  WifiChannel& m_channel;
  const MacParams& m_params;
  NodeId m_node;
  RngStream m_backoff;

  std::deque<Frame> m_queue;
  bool m_busy = false; // head frame owned by the contention/tx state machine
  std::uint32_t m_cw = 0;
  std::uint32_t m_attempts = 0;
  std::uint64_t m_remainingSlots = 0;
  SimTime m_slotBase = 0;
  SimTime m_expiryAt = 0;
  EventId m_expiryEvent = 0;
  bool m_counting = false;
  MacCounters m_counters;

  friend class WifiChannel;
};

/// Single collision domain: any two transmissions that overlap in time
/// corrupt each other for every receiver (no capture effect, no hidden
/// terminals). Successful unicast reserves the channel again after SIFS for
/// the ACK, which is never lost.
class WifiChannel {
public:
  using DeliverFn = std::function<void(NodeId receiver, const Frame&)>;
  using LogFn = std::function<void(const FrameLogRecord&)>;

  WifiChannel(Scheduler& sched, const MacParams& params)
    : m_sched(sched)
    , m_params(params)
  {
  }

  void
  attach(WifiMac* mac)
  {
    auto pos = std::lower_bound(m_attached.begin(), m_attached.end(), mac,
                                [](const WifiMac* a, const WifiMac* b) {
                                  return a->node() < b->node();
                                });
    m_attached.insert(pos, mac);
  }

  bool
  isAttached(NodeId node) const noexcept
  {
    for (const WifiMac* m : m_attached) {
      if (m->node() == node) {
        return true;
      }
    }
    return false;
  }

  void
  setDeliver(DeliverFn fn)
  {
    m_deliver = std::move(fn);
  }

  void
  setFrameLog(LogFn fn)
  {
    m_log = std::move(fn);
  }

  bool
  busy() const noexcept
  {
    return !m_active.empty();
  }

  /// Wireless frames by service over the channel's lifetime, counted once per
  /// final outcome record (the deployment-purity evidence).
  std::uint64_t
  broadcastFrameCount() const noexcept
  {
    return m_broadcastFrames;
  }

  std::uint64_t
  unicastFrameCount() const noexcept
  {
    return m_unicastFrames;
  }

  const std::vector<WifiMac*>&
  attached() const noexcept
  {
    return m_attached;
  }

private:
  struct ActiveTx {
    std::uint64_t id;
    WifiMac* mac;        // transmitting station; null for ACK reservations
    WifiMac* ackFor;     // station whose unicast this ACK confirms
    const Frame* frame;  // valid for data transmissions until outcome handled
    SimTime end;
    bool corrupted;
    bool isAck;
  };

  void
  addContender(WifiMac* mac)
  {
    auto pos = std::lower_bound(m_contenders.begin(), m_contenders.end(), mac,
                                [](const WifiMac* a, const WifiMac* b) {
                                  return a->node() < b->node();
                                });
    m_contenders.insert(pos, mac);
  }

  void
  removeContender(WifiMac* mac)
  {
    auto it = std::find(m_contenders.begin(), m_contenders.end(), mac);
    if (it != m_contenders.end()) {
      m_contenders.erase(it);
    }
  }

  void
  beginTx(WifiMac* mac, const Frame* frame, SimTime duration, bool isAck, WifiMac* ackFor)
  {
    SimTime now = m_sched.now();
    bool overlap = !m_active.empty();
    if (overlap) {
      if (isAck) {
        // Structurally impossible: the earliest contender start after a data
        // frame is DIFS > SIFS, and overlapping data never triggers an ACK.
        throw RuntimeFailure("mac: ACK overlapped another transmission");
      }
      for (ActiveTx& a : m_active) {
        a.corrupted = true;
      }
    }
    std::uint64_t id = m_nextTxId++;
    m_active.push_back(ActiveTx{id, mac, ackFor, frame, now + duration, overlap, isAck});
    for (WifiMac* c : m_contenders) {
      if (c != mac) {
        c->freezeForBusy(now);
      }
    }
    m_sched.schedule(now + duration, [this, id] { onTxEnd(id); });
  }

  void
  onTxEnd(std::uint64_t id)
  {
    auto it = std::find_if(m_active.begin(), m_active.end(),
                           [id](const ActiveTx& a) { return a.id == id; });
    ActiveTx tx = *it;
    m_active.erase(it);
    SimTime now = m_sched.now();

    if (tx.isAck) {
      tx.ackFor->onAckComplete();
    }
    else if (tx.frame->dest == kBroadcastNode) {
      logOutcome(now, *tx.frame,
                 tx.corrupted ? FrameOutcome::kCollided : FrameOutcome::kDelivered);
      if (!tx.corrupted && m_deliver) {
        for (WifiMac* receiver : m_attached) { // ascending node id
          if (receiver->node() != tx.frame->src) {
            m_deliver(receiver->node(), *tx.frame);
          }
        }
      }
      tx.mac->onBroadcastTxEnd(tx.corrupted);
    }
    else { // unicast data
      if (tx.corrupted) {
        if (tx.mac->retryBudgetSpent()) {
          logOutcome(now, *tx.frame, FrameOutcome::kRetryExhausted);
          tx.mac->abandonHead();
        }
        else {
          tx.mac->retryHead();
        }
      }
      else {
        logOutcome(now, *tx.frame, FrameOutcome::kDelivered);
        if (m_deliver) {
          m_deliver(tx.frame->dest, *tx.frame);
        }
        // Reserve the channel for the ACK after SIFS; the sender completes
        // when the ACK finishes.
        WifiMac* sender = tx.mac;
        m_sched.schedule(now + m_params.sifs, [this, sender] {
          beginTx(nullptr, nullptr, m_params.ackDuration, true, sender);
        });
      }
    }

    if (m_active.empty()) {
      for (WifiMac* c : m_contenders) {
        c->resumeCountdown(now);
      }
    }
  }

  void
  logOutcome(SimTime t, const Frame& frame, FrameOutcome outcome)
  {
    if (frame.dest == kBroadcastNode) {
      ++m_broadcastFrames;
    }
    else {
      ++m_unicastFrames;
    }
    if (m_log) {
      m_log(FrameLogRecord{t, frame.src, frame.dest, frame.service, frame.bytes, outcome});
    }
  }

  Scheduler& m_sched;
  const MacParams& m_params;
  std::vector<WifiMac*> m_attached;   // sorted by node id
  std::vector<WifiMac*> m_contenders; // sorted by node id
  std::vector<ActiveTx> m_active;
  std::uint64_t m_nextTxId = 0;
  std::uint64_t m_broadcastFrames = 0;
  std::uint64_t m_unicastFrames = 0;
  DeliverFn m_deliver;
  LogFn m_log;

  friend class WifiMac;
};

inline void
WifiMac::enqueue(Frame frame)
{
  // Every offered frame counts as enqueued, so the conservation identity
  // delivered + collided + queue-dropped + retry-exhausted (+ still-queued)
  // = enqueued holds per node at any instant.
  ++m_counters.enqueued;
  if (m_queue.size() >= m_params.queueCap) {
    ++m_counters.queueDropped;
    m_channel.logOutcome(m_sched.now(), frame, FrameOutcome::kQueueDropped);
    return;
  }
  m_queue.push_back(std::move(frame));
  if (!m_busy) {
    m_busy = true;
    beginContention();
  }
}

inline void
WifiMac::startBackoff()
{
  m_remainingSlots =
    static_cast<std::uint64_t>(m_backoff.uniformInt(0, static_cast<std::int64_t>(m_cw)));
  m_counting = false;
  m_channel.addContender(this);
  if (!m_channel.busy()) {
    resumeCountdown(m_sched.now());
  }
}

inline void
WifiMac::onBackoffExpiry()
{
  m_counting = false;
  m_channel.removeContender(this);
  ++m_attempts;
  ++m_counters.txAttempts;
  const Frame& frame = m_queue.front();
  m_channel.beginTx(this, &frame, airtime(frame.bytes, frame.service, m_params), false, nullptr);
}

} // namespace vndn

#endif // VNDN_MAC_WIFI_HPP
