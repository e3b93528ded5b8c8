#ifndef VNDN_NDN_FORWARDER_HPP
#define VNDN_NDN_FORWARDER_HPP

#include "cs.hpp"
#include "fib.hpp"
#include "pit.hpp"

#include <cstdint>
#include <vector>

namespace vndn {

enum class FaceKind : std::uint8_t {
  kApplication,
  kNativeLink,
  kOverlayTunnel,
  kPointToPoint,
};

struct SendAction {
  FaceId face;
  Packet packet;
};

struct ForwarderCounters {
  std::uint64_t interestsReceived = 0;
  std::uint64_t dataReceived = 0;
  std::uint64_t cacheHits = 0;
  std::uint64_t duplicateNonceDrops = 0;
  std::uint64_t noRouteDrops = 0;
  std::uint64_t unsolicitedDrops = 0;
};

/// NDN forwarding pipeline over CS, PIT and FIB.
///
/// Packet handlers return their effects as send actions on faces; the owner
/// executes them on the attached transports. Drops are silent (counted, not
/// errored).
class Forwarder {
public:
  explicit Forwarder(std::size_t csCapacity = 0)
    : m_cs(csCapacity)
  {
  }

  FaceId
  addFace(FaceKind kind)
  {
    m_faceKinds.push_back(kind);
    return static_cast<FaceId>(m_faceKinds.size()); // ids start at 1
  }

  FaceKind
  faceKind(FaceId id) const
  {
    return m_faceKinds.at(id - 1);
  }

  /// Interest pipeline, in order: duplicate-nonce drop; CS exact hit answered
  /// on the arrival face; live PIT entry aggregated (no forward); otherwise
  /// FIB longest-prefix match excluding the arrival face, then forward and
  /// record the PIT entry. No usable route -> drop without state.
  void
  onInterest(const Interest& interest, FaceId inFace, SimTime now,
             std::vector<SendAction>& actions)
  {
    ++m_counters.interestsReceived;

    PitEntry* entry = m_pit.find(interest.name, now);
    if (entry != nullptr && entry->hasNonce(interest.nonce)) {
      ++m_counters.duplicateNonceDrops;
      return;
    }

    if (const Data* cached = m_cs.lookup(interest.name)) {
      ++m_counters.cacheHits;
      actions.push_back(SendAction{inFace, *cached});
      return;
    }

    if (entry != nullptr) {
      entry->recordInFace(inFace);
      entry->recordNonce(interest.nonce);
      entry->expiresAt = std::max(entry->expiresAt, now + interest.lifetime);
      return; // aggregated; upstream forward already pending
    }

    auto outFace = m_fib.lookup(interest.name, inFace);
    if (!outFace) {
      ++m_counters.noRouteDrops;
      return;
    }
    m_pit.insert(interest.name, inFace, interest.nonce, now + interest.lifetime);
    actions.push_back(SendAction{*outFace, interest});
  }

  /// Data pipeline: a live PIT match stores the Data in the CS and emits it
  /// to every recorded downstream face except the arrival face, then deletes
  /// the entry; without a match the Data is dropped as unsolicited.
  void
  onData(const Data& data, FaceId inFace, SimTime now, std::vector<SendAction>& actions)
  {
    ++m_counters.dataReceived;

    PitEntry* entry = m_pit.find(data.name, now);
    if (entry == nullptr) {
      ++m_counters.unsolicitedDrops;
      return;
    }
    m_cs.insert(data);
    for (FaceId face : entry->inFaces) {
      if (face != inFace) {
        actions.push_back(SendAction{face, data});
      }
    }
    m_pit.erase(data.name);
  }

  std::size_t
  pitExpire(SimTime now)
  {
    return m_pit.expire(now);
  }

  ContentStore&
  cs() noexcept
  {
    return m_cs;
  }

  Pit&
  pit() noexcept
  {
    return m_pit;
  }

  Fib&
  fib() noexcept
  {
    return m_fib;
  }

  const ForwarderCounters&
  counters() const noexcept
  {
    return m_counters;
  }

private:
  ContentStore m_cs;
  Pit m_pit;
  Fib m_fib;
  std::vector<FaceKind> m_faceKinds;
  ForwarderCounters m_counters;
};

} // namespace vndn

#endif // VNDN_NDN_FORWARDER_HPP
