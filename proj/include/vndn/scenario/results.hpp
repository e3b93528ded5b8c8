#ifndef VNDN_SCENARIO_RESULTS_HPP
#define VNDN_SCENARIO_RESULTS_HPP

#include "config.hpp"
#include "instance.hpp"
#include "metrics.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vndn {

inline constexpr std::string_view kTotalsHeader =
  "instance,replication,app,interests_sent,data_received";
inline constexpr std::string_view kTimeseriesHeader =
  "instance,replication,second,interests_sent,data_received";
inline constexpr std::string_view kMacHeader =
  "instance,replication,enqueued,delivered,collided,queue_dropped,retry_exhausted,residual,"
  "tx_attempts,broadcast_frames,unicast_frames";
inline constexpr std::string_view kFrameLogHeader = "time_ns,src,dest,service,bytes,outcome";

/// Per-app totals rows. Row structure is fixed by the instance's app mix (not
/// by observed counts), so files are schema-stable across replications.
inline std::string
totalsRows(const InstanceSpec& spec, std::uint32_t replication, const RunMetrics& m)
{
  std::string out;
  char buf[160];
  auto row = [&](AppKind app) {
    const AppTotals& t = m.perApp[appIndex(app)];
    std::snprintf(buf, sizeof(buf), "%s,%u,%s,%llu,%llu\n", spec.id.c_str(), replication,
                  std::string(appKindToString(app)).c_str(),
                  static_cast<unsigned long long>(t.interestsSent),
                  static_cast<unsigned long long>(t.dataReceived));
    out += buf;
  };
  row(AppKind::kCbr);
  if (spec.mix == AppMix::kHalfModified)
    row(AppKind::kModified);
  return out;
}

inline std::string
timeseriesRows(const InstanceSpec& spec, std::uint32_t replication, const RunMetrics& m)
{
  std::string out;
  out.reserve(m.sentPerSecond.size() * 40);
  char buf[160];
  for (std::size_t s = 0; s < m.sentPerSecond.size(); ++s) {
    std::snprintf(buf, sizeof(buf), "%s,%u,%zu,%llu,%llu\n", spec.id.c_str(), replication, s,
                  static_cast<unsigned long long>(m.sentPerSecond[s]),
                  static_cast<unsigned long long>(m.receivedPerSecond[s]));
    out += buf;
  }
  return out;
}

inline std::string
macRow(const InstanceSpec& spec, std::uint32_t replication, const RunMetrics& m)
{
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%s,%u,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu,%llu\n",
                spec.id.c_str(), replication, static_cast<unsigned long long>(m.mac.enqueued),
                static_cast<unsigned long long>(m.mac.delivered),
                static_cast<unsigned long long>(m.mac.collided),
                static_cast<unsigned long long>(m.mac.queueDropped),
                static_cast<unsigned long long>(m.mac.retryExhausted),
                static_cast<unsigned long long>(m.macResidual),
                static_cast<unsigned long long>(m.mac.txAttempts),
                static_cast<unsigned long long>(m.wirelessBroadcastFrames),
                static_cast<unsigned long long>(m.wirelessUnicastFrames));
  return buf;
}

inline std::string
frameLogLine(const FrameLogRecord& r)
{
  char buf[128];
  std::string dest = r.dest == kBroadcastNode ? "broadcast" : std::to_string(r.dest);
  std::snprintf(buf, sizeof(buf), "%lld,%u,%s,%s,%u,%s\n", static_cast<long long>(r.time), r.src,
                dest.c_str(), r.service == WirelessService::kBasicBroadcast ? "basic" : "full",
                r.bytes, toString(r.outcome));
  return buf;
}

inline void
writeFile(const std::string& path, std::string_view content)
{
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw RuntimeFailure("cannot open '" + path + "' for writing");
  f.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!f)
    throw RuntimeFailure("failed writing '" + path + "'");
}

inline std::string
readFile(const std::string& path)
{
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw ValidationError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

/// Ordered key=value provenance record written next to every result file.
/// Equal manifests imply the producing inputs were equal, hence equal bytes.
class Manifest {
public:
  void
  set(std::string key, std::string value)
  {
    m_entries.emplace_back(std::move(key), std::move(value));
  }

  void
  setFileHash(const std::string& name, std::string_view content)
  {
    set("file." + name, hashToHex(fnv1a64(content)));
  }

  std::string
  text() const
  {
    std::string out;
    for (const auto& [k, v] : m_entries)
      out += k + "=" + v + "\n";
    return out;
  }

  void
  write(const std::string& path) const
  {
    writeFile(path, text());
  }

private:
  std::vector<std::pair<std::string, std::string>> m_entries;
};

inline Manifest
runManifest(const InstanceSpec& spec, std::uint32_t replication, std::uint64_t seed,
            const RunConfig& cfg, std::string_view traceBytes)
{
  Manifest m;
  m.set("tool_version", VNDN_VERSION);
  m.set("instance", spec.id);
  m.set("replication", std::to_string(replication));
  m.set("seed", std::to_string(seed));
  m.set("config_hash", hashToHex(cfg.hash()));
  m.set("trace_hash", hashToHex(fnv1a64(traceBytes)));
  return m;
}

} // namespace vndn

#endif // VNDN_SCENARIO_RESULTS_HPP
