#ifndef VNDN_SCENARIO_CONFIG_HPP
#define VNDN_SCENARIO_CONFIG_HPP

#include "../mac/wifi.hpp"
#include "../mobility/trace.hpp"
#include "../util/config.hpp"
#include "../util/hash.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <string>

namespace vndn {

/// Effective run configuration: compiled defaults overlaid with key=value
/// overrides. Every field participates in the canonical text whose hash goes
/// into manifests, so two runs with equal hashes saw equal knobs.
struct RunConfig {
  std::int64_t horizonS = 300;
  std::int64_t drainS = 8; // post-horizon settling window for queue drain
  MacParams mac;
  std::size_t csCapacity = 10'000;
  double interestLifetimeS = 4.0;
  std::uint32_t rateMinPps = mobility::kRateMinPps;
  std::uint32_t rateMaxPps = mobility::kRateMaxPps;
  std::uint32_t refHz = 100;
  std::uint64_t p2pRateKbps = 1'000'000; // 1 Gb/s
  std::int64_t p2pDelayMs = 30;

  static RunConfig
  fromConfig(const Config& cfg)
  {
    static const std::array<std::string, 12> kKnownKeys = {
      "horizon_s",
      "mac.basic_rate_mbps",
      "mac.full_rate_mbps",
      "mac.cw_min",
      "mac.cw_max",
      "mac.retry_limit",
      "mac.queue_capacity",
      "ndn.cs_capacity",
      "ndn.interest_lifetime_s",
      "traffic.rate_min_pps",
      "traffic.rate_max_pps",
      "traffic.ref_hz",
    };
    for (const auto& [key, value] : cfg.entries()) {
      bool known = false;
      for (const std::string& k : kKnownKeys)
        known = known || k == key;
      if (!known)
        throw ValidationError("unknown config key '" + key + "'");
    }

    RunConfig rc;
    rc.horizonS = cfg.getInt("horizon_s", rc.horizonS);
    rc.mac.basicRateKbps = mbpsToKbps(cfg, "mac.basic_rate_mbps", rc.mac.basicRateKbps);
    rc.mac.fullRateKbps = mbpsToKbps(cfg, "mac.full_rate_mbps", rc.mac.fullRateKbps);
    rc.mac.cwMin = checkedU32(cfg, "mac.cw_min", rc.mac.cwMin);
    rc.mac.cwMax = checkedU32(cfg, "mac.cw_max", rc.mac.cwMax);
    rc.mac.retryLimit = checkedU32(cfg, "mac.retry_limit", rc.mac.retryLimit);
    rc.mac.queueCap = static_cast<std::size_t>(
      cfg.getInt("mac.queue_capacity", static_cast<std::int64_t>(rc.mac.queueCap)));
    rc.csCapacity =
      static_cast<std::size_t>(cfg.getInt("ndn.cs_capacity", static_cast<std::int64_t>(rc.csCapacity)));
    rc.interestLifetimeS = cfg.getDouble("ndn.interest_lifetime_s", rc.interestLifetimeS);
    rc.rateMinPps = checkedU32(cfg, "traffic.rate_min_pps", rc.rateMinPps);
    rc.rateMaxPps = checkedU32(cfg, "traffic.rate_max_pps", rc.rateMaxPps);
    rc.refHz = checkedU32(cfg, "traffic.ref_hz", rc.refHz);
    rc.validate();
    return rc;
  }

  void
  validate() const
  {
    if (horizonS <= 0)
      throw ValidationError("horizon_s must be positive");
    if (interestLifetimeS <= 0.0)
      throw ValidationError("ndn.interest_lifetime_s must be positive");
    if (rateMinPps == 0 || rateMinPps > rateMaxPps)
      throw ValidationError("traffic rate range is invalid");
    if (refHz == 0)
      throw ValidationError("traffic.ref_hz must be positive");
    mac.validate();
  }

  SimTime
  horizon() const
  {
    return time::fromS(horizonS);
  }

  SimTime
  stopTime() const
  {
    return time::fromS(horizonS + drainS);
  }

  SimTime
  interestLifetime() const
  {
    return time::fromSeconds(interestLifetimeS);
  }

  /// Canonical key=value rendering of the effective configuration (sorted
  /// keys, fixed float formatting) — the bytes behind the config hash.
  std::string
  canonicalText() const
  {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "horizon_s=%lld\n"
                  "mac.basic_rate_mbps=%.6g\n"
                  "mac.cw_max=%u\n"
                  "mac.cw_min=%u\n"
                  "mac.full_rate_mbps=%.6g\n"
                  "mac.queue_capacity=%zu\n"
                  "mac.retry_limit=%u\n"
                  "ndn.cs_capacity=%zu\n"
                  "ndn.interest_lifetime_s=%.6g\n"
                  "traffic.rate_max_pps=%u\n"
                  "traffic.rate_min_pps=%u\n"
                  "traffic.ref_hz=%u\n",
                  static_cast<long long>(horizonS), static_cast<double>(mac.basicRateKbps) / 1000.0,
                  mac.cwMax, mac.cwMin, static_cast<double>(mac.fullRateKbps) / 1000.0, mac.queueCap,
                  mac.retryLimit, csCapacity, interestLifetimeS, rateMaxPps, rateMinPps, refHz);
    return buf;
  }

  std::uint64_t
  hash() const
  {
    return fnv1a64(canonicalText());
  }

private:
  static std::uint64_t
  mbpsToKbps(const Config& cfg, const std::string& key, std::uint64_t fallback)
  {
    if (!cfg.has(key))
      return fallback;
    double mbps = cfg.getDouble(key, 0.0);
    if (!(mbps > 0.0) || mbps > 1e6)
      throw ValidationError("config key '" + key + "' out of range");
    return static_cast<std::uint64_t>(std::llround(mbps * 1000.0));
  }

  static std::uint32_t
  checkedU32(const Config& cfg, const std::string& key, std::uint32_t fallback)
  {
    std::int64_t v = cfg.getInt(key, static_cast<std::int64_t>(fallback));
    if (v < 0 || v > 0xffffffffLL)
      throw ValidationError("config key '" + key + "' out of range");
    return static_cast<std::uint32_t>(v);
  }
};

inline std::string
hashToHex(std::uint64_t h)
{
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace vndn

#endif // VNDN_SCENARIO_CONFIG_HPP
