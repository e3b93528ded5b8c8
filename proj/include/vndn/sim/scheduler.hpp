#ifndef VNDN_SIM_SCHEDULER_HPP
#define VNDN_SIM_SCHEDULER_HPP

#include "../util/errors.hpp"
#include "time.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace vndn {

using EventId = std::uint64_t;

/// Deterministic discrete-event scheduler.
///
/// Events fire in (time, insertion order) so equal-time events run FIFO.
/// Cancellation is lazy: cancelled ids are skipped when popped.
class Scheduler {
public:
  /// Schedule fn at absolute time `at`; scheduling in the past is an error.
  EventId
  schedule(SimTime at, std::function<void()> fn)
  {
    if (at < m_now) {
      throw RuntimeFailure("schedule: event at " + std::to_string(at) + "ns is in the past (now " +
                           std::to_string(m_now) + "ns)");
    }
    EventId id = m_nextId++;
    m_queue.push(Event{at, id, std::move(fn)});
    return id;
  }

  /// Cancel a pending event; unknown or already-fired ids are ignored.
  void
  cancel(EventId id)
  {
    m_cancelled.insert(id);
  }

  /// Dispatch every event with fire time <= end, in order; afterwards the
  /// clock reads exactly `end` even if no event fired.
  std::size_t
  runUntil(SimTime end)
  {
    std::size_t dispatched = 0;
    while (!m_queue.empty() && m_queue.top().at <= end) {
      Event ev = std::move(const_cast<Event&>(m_queue.top()));
      m_queue.pop();
      auto cancelledIt = m_cancelled.find(ev.id);
      if (cancelledIt != m_cancelled.end()) {
        m_cancelled.erase(cancelledIt);
        continue;
      }
      m_now = ev.at;
      ev.fn();
      ++dispatched;
    }
    m_now = end;
    return dispatched;
  }

  SimTime
  now() const noexcept
  {
    return m_now;
  }

  std::size_t
  pendingCount() const noexcept
  {
    return m_queue.size() - m_cancelled.size();
  }

private:
  struct Event {
    SimTime at;
    EventId id;
    std::function<void()> fn;
  };

  struct LaterFirst {
    bool
    operator()(const Event& a, const Event& b) const noexcept
    {
      if (a.at != b.at) {
        return a.at > b.at;
      }
      return a.id > b.id;
    }
  };

  std::priority_queue<Event, std::vector<Event>, LaterFirst> m_queue;
  std::unordered_set<EventId> m_cancelled;
  SimTime m_now = 0;
  EventId m_nextId = 0;
};

} // namespace vndn

#endif // VNDN_SIM_SCHEDULER_HPP
