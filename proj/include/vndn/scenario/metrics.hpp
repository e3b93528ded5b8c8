#ifndef VNDN_SCENARIO_METRICS_HPP
#define VNDN_SCENARIO_METRICS_HPP

#include "../mac/wifi.hpp"
#include "../mobility/trace.hpp"
#include "../ndn/forwarder.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace vndn {

struct AppTotals {
  std::uint64_t interestsSent = 0;
  std::uint64_t dataReceived = 0;
};

inline std::size_t
appIndex(AppKind app)
{
  switch (app) {
    case AppKind::kCbr:
      return 0;
    case AppKind::kModified:
      return 1;
    case AppKind::kUnassigned:
      break;
  }
  throw ValidationError("metrics: app must be assigned");
}

inline AppKind
appOfIndex(std::size_t i)
{
  return i == 0 ? AppKind::kCbr : AppKind::kModified;
}

/// Everything one run reports. Consumer counters are attributed to the app of
/// the receiving vehicle; MAC counters aggregate router plus all vehicles.
struct RunMetrics {
  std::array<AppTotals, 2> perApp{}; // [0]=cbr, [1]=modified
  std::vector<std::uint64_t> sentPerSecond;
  std::vector<std::uint64_t> receivedPerSecond;
  std::vector<AppTotals> perVehicle;

  MacCounters mac{};
  std::uint64_t macResidual = 0; // frames still queued when the run stopped
  std::uint64_t wirelessBroadcastFrames = 0;
  std::uint64_t wirelessUnicastFrames = 0;

  ForwarderCounters router{};
  std::uint64_t producerInterestsReceived = 0;

  AppTotals
  totals() const
  {
    AppTotals t;
    for (const AppTotals& a : perApp) {
      t.interestsSent += a.interestsSent;
      t.dataReceived += a.dataReceived;
    }
    return t;
  }
};

} // namespace vndn

#endif // VNDN_SCENARIO_METRICS_HPP
