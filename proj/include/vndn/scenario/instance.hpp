#ifndef VNDN_SCENARIO_INSTANCE_HPP
#define VNDN_SCENARIO_INSTANCE_HPP

#include "../mobility/trace.hpp"
#include "../sim/rng.hpp"

#include <array>
#include <string>
#include <string_view>

namespace vndn {

enum class Deployment : std::uint8_t {
  kNative,  // NDN straight over the link layer: wireless hops are broadcast
  kOverlay, // NDN in UDP/IPv4 unicast tunnels: wireless hops are full-rate
};

enum class AppMix : std::uint8_t {
  kAllCbr,        // every vehicle requests its own prefix
  kHalfModified,  // half the vehicles request shared time-keyed content
};

/// One of the four evaluated instances.
struct InstanceSpec {
  std::string id;
  Deployment deployment = Deployment::kNative;
  AppMix mix = AppMix::kAllCbr;

  static const std::array<InstanceSpec, 4>&
  all()
  {
    static const std::array<InstanceSpec, 4> kAll = {{
      {"native-1", Deployment::kNative, AppMix::kAllCbr},
      {"native-2", Deployment::kNative, AppMix::kHalfModified},
      {"overlay-1", Deployment::kOverlay, AppMix::kAllCbr},
      {"overlay-2", Deployment::kOverlay, AppMix::kHalfModified},
    }};
    return kAll;
  }

  static InstanceSpec
  parse(std::string_view id)
  {
    for (const InstanceSpec& spec : all()) {
      if (spec.id == id)
        return spec;
    }
    throw ValidationError("unknown instance '" + std::string(id) + "'");
  }
};

/// Fills the deferred app column. The mix stream is named by replication only,
/// so the same half of the fleet turns modified in every instance sharing a
/// replication (common random numbers across deployments).
inline void
assignApps(std::vector<VehicleTrace>& traces, AppMix mix, std::uint64_t seed,
           std::uint32_t replication)
{
  for (const VehicleTrace& v : traces) {
    if (v.app != AppKind::kUnassigned) {
      throw ValidationError("trace/app-mix inconsistency: vehicle " +
                            std::to_string(v.vehicleId) + " already assigned '" +
                            std::string(appKindToString(v.app)) + "'");
    }
  }

  for (VehicleTrace& v : traces)
    v.app = AppKind::kCbr;

  if (mix == AppMix::kAllCbr)
    return;

  std::vector<std::uint32_t> order(traces.size());
  for (std::uint32_t i = 0; i < order.size(); ++i)
    order[i] = i;
  RngStream rng(seed, "app-mix/" + std::to_string(replication));
  for (std::size_t i = order.size(); i > 1; --i) {
    auto j = static_cast<std::size_t>(rng.uniformInt(0, static_cast<std::int64_t>(i) - 1));
    std::swap(order[i - 1], order[j]);
  }
  std::size_t modifiedCount = traces.size() / 2; // 125 -> 62, rounding down
  for (std::size_t i = 0; i < modifiedCount; ++i)
    traces[order[i]].app = AppKind::kModified;
}

} // namespace vndn

#endif // VNDN_SCENARIO_INSTANCE_HPP
