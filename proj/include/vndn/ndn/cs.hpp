#ifndef VNDN_NDN_CS_HPP
#define VNDN_NDN_CS_HPP

#include "packet.hpp"

#include <list>
#include <unordered_map>
#include <utility>

namespace vndn {

/// Content Store: exact-name cache with LRU eviction.
/// Capacity 0 disables the store (every lookup misses, inserts are no-ops).
class ContentStore {
public:
  explicit ContentStore(std::size_t capacity)
    : m_capacity(capacity)
  {
  }

  /// Exact-name lookup; a hit refreshes the entry's recency.
  const Data*
  lookup(const Name& name)
  {
    if (m_capacity == 0) {
      return nullptr;
    }
    auto it = m_index.find(name);
    if (it == m_index.end()) {
      return nullptr;
    }
    m_lru.splice(m_lru.begin(), m_lru, it->second);
    return &it->second->second;
  }

  /// Insert (or refresh) a Data packet, evicting the least recently used
  /// entry when at capacity.
  void
  insert(const Data& data)
  {
    if (m_capacity == 0) {
      return;
    }
    auto it = m_index.find(data.name);
    if (it != m_index.end()) {
      it->second->second = data;
      m_lru.splice(m_lru.begin(), m_lru, it->second);
      return;
    }
    if (m_lru.size() >= m_capacity) {
      m_index.erase(m_lru.back().first);
      m_lru.pop_back();
    }
    m_lru.emplace_front(data.name, data);
    m_index[data.name] = m_lru.begin();
  }

  std::size_t
  size() const noexcept
  {
    return m_lru.size();
  }

  std::size_t
  capacity() const noexcept
  {
    return m_capacity;
  }

private:
  std::size_t m_capacity;
  std::list<std::pair<Name, Data>> m_lru; // front = most recently used
  std::unordered_map<Name, std::list<std::pair<Name, Data>>::iterator, NameHash> m_index;
};

} // namespace vndn

#endif // VNDN_NDN_CS_HPP
