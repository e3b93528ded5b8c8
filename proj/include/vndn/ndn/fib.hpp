#ifndef VNDN_NDN_FIB_HPP
#define VNDN_NDN_FIB_HPP

#include "pit.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace vndn {

/// Forwarding Information Base: name-prefix routes, longest-prefix match.
/// The root prefix "/" is a valid route matching every name.
class Fib {
public:
  /// Add a route; re-adding the same prefix replaces its next hop.
  void
  addRoute(Name prefix, FaceId face)
  {
    for (auto& r : m_routes) {
      if (r.first == prefix) {
        r.second = face;
        return;
      }
    }
    m_routes.emplace_back(std::move(prefix), face);
  }

  /// Longest-prefix match; routes whose next hop equals excludeFace are
  /// skipped so an interest is never forwarded out of its arrival face.
  std::optional<FaceId>
  lookup(const Name& name, FaceId excludeFace = 0) const noexcept
  {
    const std::pair<Name, FaceId>* best = nullptr;
    for (const auto& r : m_routes) {
      if (r.second == excludeFace) {
        continue;
      }
      if (!r.first.isPrefixOf(name)) {
        continue;
      }
      if (best == nullptr || r.first.size() > best->first.size()) {
        best = &r;
      }
    }
    if (best == nullptr) {
      return std::nullopt;
    }
    return best->second;
  }

  std::size_t
  size() const noexcept
  {
    return m_routes.size();
  }

private:
  std::vector<std::pair<Name, FaceId>> m_routes;
};

} // namespace vndn

#endif // VNDN_NDN_FIB_HPP
