#ifndef VNDN_NDN_PIT_HPP
#define VNDN_NDN_PIT_HPP

#include "../sim/time.hpp"
#include "packet.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace vndn {

using FaceId = std::uint32_t;

struct PitEntry {
  std::vector<FaceId> inFaces;      // downstream faces awaiting this Data
  std::vector<std::uint32_t> nonces; // nonces seen for this name
  SimTime expiresAt = 0;             // entry is dead once now >= expiresAt

  bool
  hasNonce(std::uint32_t nonce) const noexcept
  {
    return std::find(nonces.begin(), nonces.end(), nonce) != nonces.end();
  }

  void
  recordNonce(std::uint32_t nonce)
  {
    if (!hasNonce(nonce)) {
      nonces.push_back(nonce);
    }
  }

  void
  recordInFace(FaceId face)
  {
    if (std::find(inFaces.begin(), inFaces.end(), face) == inFaces.end()) {
      inFaces.push_back(face);
    }
  }
};

/// Pending Interest Table keyed by exact name.
/// Expiry is inclusive: an entry whose expires_at <= now is no longer live.
class Pit {
public:
  /// Find the live entry for a name; a dead entry encountered here is erased
  /// (lazy expiry) and counted as expired.
  PitEntry*
  find(const Name& name, SimTime now)
  {
    auto it = m_entries.find(name);
    if (it == m_entries.end()) {
      return nullptr;
    }
    if (it->second.expiresAt <= now) {
      m_entries.erase(it);
      ++m_expiredCount;
      return nullptr;
    }
    return &it->second;
  }

  PitEntry&
  insert(const Name& name, FaceId inFace, std::uint32_t nonce, SimTime expiresAt)
  {
    PitEntry& entry = m_entries[name];
    entry.recordInFace(inFace);
    entry.recordNonce(nonce);
    entry.expiresAt = std::max(entry.expiresAt, expiresAt);
    return entry;
  }

  void
  erase(const Name& name)
  {
    m_entries.erase(name);
  }

  /// Remove every entry with expires_at <= now; returns how many were removed.
  std::size_t
  expire(SimTime now)
  {
    std::size_t removed = 0;
    for (auto it = m_entries.begin(); it != m_entries.end();) {
      if (it->second.expiresAt <= now) {
        it = m_entries.erase(it);
        ++removed;
      }
      else {
        ++it;
      }
    }
    m_expiredCount += removed;
    return removed;
  }

  std::size_t
  size() const noexcept
  {
    return m_entries.size();
  }

  std::uint64_t
  expiredCount() const noexcept
  {
    return m_expiredCount;
  }

private:
  std::unordered_map<Name, PitEntry, NameHash> m_entries;
  std::uint64_t m_expiredCount = 0;
};

} // namespace vndn

#endif // VNDN_NDN_PIT_HPP
