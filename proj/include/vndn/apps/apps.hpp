#ifndef VNDN_APPS_APPS_HPP
#define VNDN_APPS_APPS_HPP

#include "../ndn/packet.hpp"
#include "../sim/time.hpp"

#include <optional>
#include <string>

namespace vndn {
namespace apps {

inline constexpr std::uint32_t kDefaultRefHz = 100;

/// Per-vehicle content prefix /data/veh-<id>; distinct prefixes guarantee
/// distinct names even for simultaneous emissions.
inline Name
cbrPrefix(std::uint32_t vehicleId)
{
  Name n;
  n.append("data");
  n.append("veh-" + std::to_string(vehicleId));
  return n;
}

inline Name
cbrName(const Name& prefix, std::uint64_t seq)
{
  Name n = prefix;
  n.append(std::to_string(seq));
  return n;
}

/// Shared-content sequence number: floor(t_seconds * refHz), computed in
/// integer nanoseconds so vehicles emitting at the same instant agree exactly.
inline std::uint64_t
sharedSeq(SimTime t, std::uint32_t refHz)
{
  return static_cast<std::uint64_t>(t) * refHz / static_cast<std::uint64_t>(time::kNsPerS);
}

inline Name
sharedName(SimTime t, std::uint32_t refHz)
{
  Name n;
  n.append("data");
  n.append("shared");
  n.append(std::to_string(sharedSeq(t, refHz)));
  return n;
}

/// The j-th emission instant: enter + j/rate, first emission exactly at enter.
inline SimTime
emissionTime(SimTime enterNs, std::uint64_t j, std::uint32_t ratePps)
{
  return enterNs + static_cast<SimTime>(j * static_cast<std::uint64_t>(time::kNsPerS) / ratePps);
}

/// Stateless echo: any interest under the registered prefix yields a data
/// packet of the same name; anything else is ignored.
inline std::optional<Data>
producerRespond(const Interest& interest, const Name& registeredPrefix,
                std::size_t payloadLength = defaults::kPayloadLength)
{
  if (!registeredPrefix.isPrefixOf(interest.name))
    return std::nullopt;
  return Data{interest.name, static_cast<std::uint32_t>(payloadLength)};
}

} // namespace apps
} // namespace vndn

#endif // VNDN_APPS_APPS_HPP
