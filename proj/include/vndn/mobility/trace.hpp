#ifndef VNDN_MOBILITY_TRACE_HPP
#define VNDN_MOBILITY_TRACE_HPP

#include "../sim/rng.hpp"
#include "../util/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace vndn {

enum class AppKind : std::uint8_t {
  kUnassigned,
  kCbr,
  kModified,
};

inline std::string_view
appKindToString(AppKind app)
{
  switch (app) {
    case AppKind::kUnassigned:
      return "unassigned";
    case AppKind::kCbr:
      return "cbr";
    case AppKind::kModified:
      return "modified";
  }
  throw ValidationError("invalid app kind");
}

inline AppKind
appKindFromString(std::string_view s)
{
  if (s == "unassigned")
    return AppKind::kUnassigned;
  if (s == "cbr")
    return AppKind::kCbr;
  if (s == "modified")
    return AppKind::kModified;
  throw ValidationError("unknown app kind '" + std::string(s) + "'");
}

/// One vehicle's presence interval and traffic parameters. Times are seconds
/// from simulation start; speed is meters per second.
struct VehicleTrace {
  std::uint32_t vehicleId = 0; // 1-based
  double enterS = 0.0;
  double exitS = 0.0;
  double speedMps = 0.0;
  std::uint32_t ratePps = 0;
  AppKind app = AppKind::kUnassigned;
};

namespace mobility {

inline constexpr std::uint32_t kVehicleCount = 125;
inline constexpr double kHorizonS = 300.0;
inline constexpr double kEntryWindowS = 280.0;
inline constexpr double kRoadLengthM = 172.0;
inline constexpr double kPauseS = 10.0;
inline constexpr double kPauseProbability = 0.15;
inline constexpr double kSpeedMeanKmh = 31.0;
inline constexpr double kSpeedSdKmh = 8.0;
inline constexpr double kSpeedMinKmh = 5.0;
inline constexpr double kSpeedMaxKmh = 60.0;
inline constexpr std::uint32_t kRateMinPps = 50;
inline constexpr std::uint32_t kRateMaxPps = 100;

inline constexpr std::string_view kCsvHeader = "vehicle_id,enter_s,exit_s,speed_mps,rate_pps,app";

/// Files are written as one numeric value per vehicle with three decimals, so
/// loaded values carry up to half a milli-unit of rounding; bounds checks on
/// loaded traces allow for that.
inline constexpr double kRoundingSlack = 5e-4;

inline std::string
traceFileName(std::uint32_t index)
{
  char buf[32];
  std::snprintf(buf, sizeof(buf), "trace-%03u", index);
  return buf;
}

/// Draws the full vehicle population for one replication. Each quantity has
/// its own named stream so adding draws to one never shifts another.
inline std::vector<VehicleTrace>
generateTrace(std::uint64_t seed)
{
  RngStream enterRng(seed, "trace/enter");
  RngStream speedRng(seed, "trace/speed");
  RngStream pauseRng(seed, "trace/pause");
  RngStream rateRng(seed, "trace/rate");

  std::vector<VehicleTrace> out;
  out.reserve(kVehicleCount);
  for (std::uint32_t k = 0; k < kVehicleCount; ++k) {
    VehicleTrace v;
    v.vehicleId = k + 1;
    v.enterS = enterRng.uniformReal(0.0, kEntryWindowS);
    double speedKmh = speedRng.truncatedNormal(kSpeedMeanKmh, kSpeedSdKmh, kSpeedMinKmh, kSpeedMaxKmh);
    v.speedMps = speedKmh / 3.6;
    double dwellS = kRoadLengthM / v.speedMps;
    if (pauseRng.uniformReal(0.0, 1.0) < kPauseProbability)
      dwellS += kPauseS;
    v.exitS = std::min(kHorizonS, v.enterS + dwellS);
    v.ratePps = static_cast<std::uint32_t>(rateRng.uniformInt(kRateMinPps, kRateMaxPps));
    v.app = AppKind::kUnassigned;
    out.push_back(v);
  }
  return out;
}

inline std::string
emitCsv(const std::vector<VehicleTrace>& traces)
{
  std::string out;
  out.reserve(64 * (traces.size() + 1));
  out += kCsvHeader;
  out += '\n';
  char buf[128];
  for (const VehicleTrace& v : traces) {
    std::snprintf(buf, sizeof(buf), "%u,%.3f,%.3f,%.3f,%u,%s\n", v.vehicleId, v.enterS, v.exitS,
                  v.speedMps, v.ratePps, std::string(appKindToString(v.app)).c_str());
    out += buf;
  }
  return out;
}

inline void
writeCsv(const std::string& path, const std::vector<VehicleTrace>& traces)
{
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw RuntimeFailure("cannot open '" + path + "' for writing");
  f << emitCsv(traces);
  if (!f)
    throw RuntimeFailure("failed writing '" + path + "'");
}

namespace detail {

[[noreturn]] inline void
rowError(std::size_t line, const std::string& what)
{
  throw ValidationError("trace line " + std::to_string(line) + ": " + what);
}

inline std::vector<std::string_view>
splitFields(std::string_view row)
{
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = row.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(row.substr(start));
      return fields;
    }
    fields.push_back(row.substr(start, comma - start));
    start = comma + 1;
  }
}

inline double
parseDouble(std::string_view s, std::size_t line, const char* field)
{
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    rowError(line, std::string("invalid ") + field + " '" + std::string(s) + "'");
  return value;
}

inline std::uint32_t
parseU32(std::string_view s, std::size_t line, const char* field)
{
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    rowError(line, std::string("invalid ") + field + " '" + std::string(s) + "'");
  return value;
}

} // namespace detail

/// Parses and validates trace CSV text. `expectedCount` of 0 skips the
/// population-size check (used by tests exercising small hand-built traces).
inline std::vector<VehicleTrace>
parseCsv(std::string_view text, std::uint32_t expectedCount = kVehicleCount)
{
  std::vector<VehicleTrace> out;
  std::size_t line = 0;
  std::size_t pos = 0;
  bool sawHeader = false;
  std::uint32_t expectedId = 1;

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view row =
      text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++line;
    if (!row.empty() && row.back() == '\r')
      detail::rowError(line, "CRLF line ending (file must be LF)");
    if (row.empty())
      continue;

    if (!sawHeader) {
      if (row != kCsvHeader)
        detail::rowError(line, "bad header '" + std::string(row) + "'");
      sawHeader = true;
      continue;
    }

    auto fields = detail::splitFields(row);
    if (fields.size() != 6)
      detail::rowError(line, "expected 6 fields, found " + std::to_string(fields.size()));

    VehicleTrace v;
    v.vehicleId = detail::parseU32(fields[0], line, "vehicle_id");
    v.enterS = detail::parseDouble(fields[1], line, "enter_s");
    v.exitS = detail::parseDouble(fields[2], line, "exit_s");
    v.speedMps = detail::parseDouble(fields[3], line, "speed_mps");
    v.ratePps = detail::parseU32(fields[4], line, "rate_pps");
    try {
      v.app = appKindFromString(fields[5]);
    }
    catch (const ValidationError& e) {
      detail::rowError(line, e.what());
    }

    if (v.vehicleId != expectedId)
      detail::rowError(line, "vehicle_id " + std::to_string(v.vehicleId) + " out of order (expected " +
                               std::to_string(expectedId) + ")");
    ++expectedId;
    if (!(v.enterS >= 0.0))
      detail::rowError(line, "enter_s must be >= 0");
    if (!(v.enterS < v.exitS))
      detail::rowError(line, "enter_s must be < exit_s");
    if (!(v.exitS <= kHorizonS))
      detail::rowError(line, "exit_s must be <= 300");
    if (!(v.speedMps >= kSpeedMinKmh / 3.6 - kRoundingSlack &&
          v.speedMps <= kSpeedMaxKmh / 3.6 + kRoundingSlack))
      detail::rowError(line, "speed_mps out of range");
    if (v.ratePps < kRateMinPps || v.ratePps > kRateMaxPps)
      detail::rowError(line, "rate_pps out of range");
    out.push_back(v);
  }

  if (!sawHeader)
    throw ValidationError("trace file is empty");
  if (expectedCount != 0 && out.size() != expectedCount)
    throw ValidationError("expected " + std::to_string(expectedCount) + " vehicles, found " +
                          std::to_string(out.size()));
  return out;
}

inline std::vector<VehicleTrace>
loadCsv(const std::string& path, std::uint32_t expectedCount = kVehicleCount)
{
  std::ifstream f(path, std::ios::binary);
  if (!f)
    throw ValidationError("cannot open trace file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  try {
    return parseCsv(ss.str(), expectedCount);
  }
  catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

} // namespace mobility
} // namespace vndn

#endif // VNDN_MOBILITY_TRACE_HPP
