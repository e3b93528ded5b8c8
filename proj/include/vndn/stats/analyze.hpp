#ifndef VNDN_STATS_ANALYZE_HPP
#define VNDN_STATS_ANALYZE_HPP

#include "../scenario/results.hpp"
#include "shapiro.hpp"
#include "stats.hpp"

#include <array>
#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace vndn::stats {

/// Per-instance samples indexed by replication (ascending), plus per-app sums
/// for the application-mix table.
struct InstanceSamples {
  std::vector<std::uint32_t> replications;
  std::vector<double> satisfaction;
  std::vector<double> dataReceived;
  std::array<std::uint64_t, 2> appSent = {0, 0};
  std::array<std::uint64_t, 2> appReceived = {0, 0};
  bool hasModified = false;
};

using TotalsTable = std::map<std::string, InstanceSamples>;

namespace detail {

inline std::vector<std::string>
splitLines(std::string_view text)
{
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(pos));
      break;
    }
    lines.emplace_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

inline std::vector<std::string>
splitFields(const std::string& line)
{
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, comma - pos));
    pos = comma + 1;
  }
}

inline std::uint64_t
parseU64(const std::string& s, const std::string& context)
{
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ValidationError(context + ": expected unsigned integer, got '" + s + "'");
  return std::stoull(s);
}

} // namespace detail

/// Parses a combined totals file and folds the app rows of each run together.
/// Every run must carry exactly the rows its instance's app mix dictates.
inline TotalsTable
parseTotals(std::string_view text)
{
  std::vector<std::string> lines = detail::splitLines(text);
  if (lines.empty() || lines[0] != kTotalsHeader)
    throw ValidationError("totals file: missing header '" + std::string(kTotalsHeader) + "'");

  struct RunAccumulator {
    std::uint64_t sent = 0, received = 0;
    std::set<AppKind> apps;
  };
  std::map<std::string, std::map<std::uint32_t, RunAccumulator>> runs;
  TotalsTable table;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty())
      continue;
    const std::string context = "totals line " + std::to_string(i + 1);
    std::vector<std::string> f = detail::splitFields(lines[i]);
    if (f.size() != 5)
      throw ValidationError(context + ": expected 5 fields, got " + std::to_string(f.size()));
    InstanceSpec spec = InstanceSpec::parse(f[0]); // rejects unknown instances
    auto replication = static_cast<std::uint32_t>(detail::parseU64(f[1], context));
    AppKind app = appKindFromString(f[2]);
    if (app == AppKind::kUnassigned)
      throw ValidationError(context + ": app must be cbr or modified");
    bool appAllowed = app == AppKind::kCbr || spec.mix == AppMix::kHalfModified;
    if (!appAllowed)
      throw ValidationError(context + ": instance " + spec.id + " has no '" + f[2] + "' rows");

    RunAccumulator& acc = runs[spec.id][replication];
    if (!acc.apps.insert(app).second)
      throw ValidationError(context + ": duplicate row for " + spec.id + " replication " + f[1] +
                            " app " + f[2]);
    std::uint64_t sent = detail::parseU64(f[3], context);
    std::uint64_t received = detail::parseU64(f[4], context);
    acc.sent += sent;
    acc.received += received;

    InstanceSamples& samples = table[spec.id];
    samples.appSent[appIndex(app)] += sent;
    samples.appReceived[appIndex(app)] += received;
    if (spec.mix == AppMix::kHalfModified)
      samples.hasModified = true;
  }

  for (const InstanceSpec& spec : InstanceSpec::all()) {
    auto it = runs.find(spec.id);
    if (it == runs.end())
      throw ValidationError("totals file: missing instance '" + spec.id + "'");
    if (it->second.size() < 2)
      throw ValidationError("totals file: instance '" + spec.id +
                            "' needs at least 2 replications for pairwise tests");
    InstanceSamples& samples = table[spec.id];
    for (const auto& [replication, acc] : it->second) {
      std::size_t expectedApps = spec.mix == AppMix::kHalfModified ? 2 : 1;
      if (acc.apps.size() != expectedApps)
        throw ValidationError("totals file: " + spec.id + " replication " +
                              std::to_string(replication) + " has incomplete app rows");
      if (acc.sent == 0)
        throw ValidationError("totals file: " + spec.id + " replication " +
                              std::to_string(replication) + " sent no interests");
      samples.replications.push_back(replication);
      samples.satisfaction.push_back(static_cast<double>(acc.received) /
                                     static_cast<double>(acc.sent));
      samples.dataReceived.push_back(static_cast<double>(acc.received));
    }
  }
  return table;
}

/// Mean interests sent / data received per (instance, second) across
/// replications, indexed by instance then second.
inline std::map<std::string, std::vector<std::array<double, 2>>>
parseTimeseriesMeans(std::string_view text)
{
  std::vector<std::string> lines = detail::splitLines(text);
  if (lines.empty() || lines[0] != kTimeseriesHeader)
    throw ValidationError("timeseries file: missing header '" + std::string(kTimeseriesHeader) +
                          "'");
  std::map<std::string, std::map<std::uint32_t, std::array<std::uint64_t, 2>>> sums;
  std::map<std::string, std::set<std::uint32_t>> reps;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty())
      continue;
    const std::string context = "timeseries line " + std::to_string(i + 1);
    std::vector<std::string> f = detail::splitFields(lines[i]);
    if (f.size() != 5)
      throw ValidationError(context + ": expected 5 fields, got " + std::to_string(f.size()));
    InstanceSpec spec = InstanceSpec::parse(f[0]);
    auto replication = static_cast<std::uint32_t>(detail::parseU64(f[1], context));
    auto second = static_cast<std::uint32_t>(detail::parseU64(f[2], context));
    auto& cell = sums[spec.id][second];
    cell[0] += detail::parseU64(f[3], context);
    cell[1] += detail::parseU64(f[4], context);
    reps[spec.id].insert(replication);
  }
  std::map<std::string, std::vector<std::array<double, 2>>> means;
  for (auto& [instance, bySecond] : sums) {
    auto repCount = static_cast<double>(reps[instance].size());
    std::vector<std::array<double, 2>>& out = means[instance];
    out.resize(bySecond.rbegin()->first + 1, {0.0, 0.0});
    for (const auto& [second, cell] : bySecond) {
      out[second][0] = static_cast<double>(cell[0]) / repCount;
      out[second][1] = static_cast<double>(cell[1]) / repCount;
    }
  }
  return means;
}

struct AnalyzePaths {
  std::string pairwise;
  std::string matrices;
  std::string satisfaction;
  std::string perApp;
  std::string normality;
  std::string timeseriesMean; ///< empty when no timeseries input was given
  std::string manifest;
};

namespace detail {

inline const std::array<std::pair<std::size_t, std::size_t>, 6> kPairOrder = {{
  {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
}};

struct MetricView {
  std::string name;
  const std::vector<double>* samples[4];
};

inline std::string
pairwiseCsv(const std::vector<MetricView>& metrics)
{
  std::string out = "metric,instance_a,instance_b,u_statistic,p_value,a12\n";
  char buf[192];
  const auto& instances = InstanceSpec::all();
  for (const MetricView& metric : metrics) {
    for (const auto& [ia, ib] : kPairOrder) {
      MannWhitneyResult mw = mannWhitney(*metric.samples[ia], *metric.samples[ib]);
      double a12 = varghaDelaneyA12(*metric.samples[ia], *metric.samples[ib]);
      std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.1f,%.9g,%.6f\n", metric.name.c_str(),
                    instances[ia].id.c_str(), instances[ib].id.c_str(), mw.u1, mw.pValue, a12);
      out += buf;
    }
  }
  return out;
}

inline std::string
matrixText(const std::vector<MetricView>& metrics)
{
  const auto& instances = InstanceSpec::all();
  std::string out;
  char buf[64];
  auto cell = [&](const std::string& s) {
    std::snprintf(buf, sizeof(buf), " %12s", s.c_str());
    out += buf;
  };
  for (const MetricView& metric : metrics) {
    for (const char* table : {"p-value", "effect-size"}) {
      out += metric.name + " " + table + " matrix (row vs column)\n";
      cell("");
      for (const InstanceSpec& spec : instances)
        cell(spec.id);
      out += "\n";
      for (std::size_t r = 0; r < 4; ++r) {
        cell(instances[r].id);
        for (std::size_t c = 0; c < 4; ++c) {
          if (r == c) {
            cell("-");
            continue;
          }
          char num[32];
          if (std::string_view(table) == "p-value") {
            MannWhitneyResult mw = mannWhitney(*metric.samples[r], *metric.samples[c]);
            std::snprintf(num, sizeof(num), "%.4g", mw.pValue);
          }
          else {
            std::snprintf(num, sizeof(num), "%.4f",
                          varghaDelaneyA12(*metric.samples[r], *metric.samples[c]));
          }
          cell(num);
        }
        out += "\n";
      }
      out += "\n";
    }
  }
  return out;
}

} // namespace detail

/// Reads a combined totals file (and, when present, its sibling timeseries
/// file), runs the pairwise test battery, and writes the report files.
inline AnalyzePaths
analyze(const std::string& totalsPath, const std::string& timeseriesPath,
        const std::string& outDir)
{
  namespace fs = std::filesystem;
  std::string totalsText = readFile(totalsPath);
  TotalsTable table = parseTotals(totalsText);
  fs::create_directories(outDir);

  const auto& instances = InstanceSpec::all();
  std::vector<detail::MetricView> metrics(2);
  metrics[0].name = "satisfaction";
  metrics[1].name = "data_received";
  for (std::size_t i = 0; i < 4; ++i) {
    metrics[0].samples[i] = &table[instances[i].id].satisfaction;
    metrics[1].samples[i] = &table[instances[i].id].dataReceived;
  }

  AnalyzePaths paths;
  Manifest manifest;
  manifest.set("tool_version", VNDN_VERSION);
  manifest.set("kind", "analysis");
  manifest.set("input.totals", hashToHex(fnv1a64(totalsText)));

  auto emit = [&](std::string AnalyzePaths::*slot, const std::string& name,
                  const std::string& content) {
    std::string path = (fs::path(outDir) / name).string();
    writeFile(path, content);
    manifest.setFileHash(name, content);
    paths.*slot = path;
  };

  emit(&AnalyzePaths::pairwise, "pairwise.csv", detail::pairwiseCsv(metrics));
  emit(&AnalyzePaths::matrices, "matrices.txt", detail::matrixText(metrics));

  char buf[256];
  std::string satisfactionCsv = "instance,replications,mean,min,max\n";
  for (const InstanceSpec& spec : instances) {
    const std::vector<double>& s = table[spec.id].satisfaction;
    double sum = 0.0, lo = s[0], hi = s[0];
    for (double v : s) {
      sum += v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    std::snprintf(buf, sizeof(buf), "%s,%zu,%.6f,%.6f,%.6f\n", spec.id.c_str(), s.size(),
                  sum / static_cast<double>(s.size()), lo, hi);
    satisfactionCsv += buf;
  }
  emit(&AnalyzePaths::satisfaction, "satisfaction.csv", satisfactionCsv);

  std::string perAppCsv = "instance,app,interests_sent,data_received,satisfaction\n";
  for (const InstanceSpec& spec : instances) {
    const InstanceSamples& samples = table[spec.id];
    if (!samples.hasModified)
      continue;
    for (AppKind app : {AppKind::kCbr, AppKind::kModified}) {
      std::uint64_t sent = samples.appSent[appIndex(app)];
      std::uint64_t received = samples.appReceived[appIndex(app)];
      std::string ratio = "n/a";
      if (sent > 0) {
        std::snprintf(buf, sizeof(buf), "%.6f", satisfaction(sent, received));
        ratio = buf;
      }
      std::snprintf(buf, sizeof(buf), "%s,%s,%" PRIu64 ",%" PRIu64 ",%s\n", spec.id.c_str(),
                    std::string(appKindToString(app)).c_str(), sent, received, ratio.c_str());
      perAppCsv += buf;
    }
  }
  emit(&AnalyzePaths::perApp, "per_app.csv", perAppCsv);

  std::string normalityCsv = "metric,instance,n,w,p_value\n";
  for (const detail::MetricView& metric : metrics) {
    for (std::size_t i = 0; i < 4; ++i) {
      const std::vector<double>& s = *metric.samples[i];
      std::string w = "n/a", p = "n/a";
      // Degenerate samples (constant, tiny) are reported as n/a: normality is
      // informational here and never gates a comparison.
      try {
        ShapiroWilkResult r = shapiroWilk(s);
        std::snprintf(buf, sizeof(buf), "%.6f", r.w);
        w = buf;
        std::snprintf(buf, sizeof(buf), "%.9g", r.pValue);
        p = buf;
      }
      catch (const ValidationError&) {
      }
      std::snprintf(buf, sizeof(buf), "%s,%s,%zu,%s,%s\n", metric.name.c_str(),
                    instances[i].id.c_str(), s.size(), w.c_str(), p.c_str());
      normalityCsv += buf;
    }
  }
  emit(&AnalyzePaths::normality, "normality.csv", normalityCsv);

  if (!timeseriesPath.empty()) {
    std::string tsText = readFile(timeseriesPath);
    manifest.set("input.timeseries", hashToHex(fnv1a64(tsText)));
    auto means = parseTimeseriesMeans(tsText);
    std::string tsCsv = "instance,second,interests_sent,data_received\n";
    for (const InstanceSpec& spec : instances) {
      auto it = means.find(spec.id);
      if (it == means.end())
        continue;
      for (std::size_t s = 0; s < it->second.size(); ++s) {
        std::snprintf(buf, sizeof(buf), "%s,%zu,%.3f,%.3f\n", spec.id.c_str(), s,
                      it->second[s][0], it->second[s][1]);
        tsCsv += buf;
      }
    }
    emit(&AnalyzePaths::timeseriesMean, "timeseries_mean.csv", tsCsv);
  }

  paths.manifest = (fs::path(outDir) / "manifest").string();
  manifest.write(paths.manifest);
  return paths;
}

} // namespace vndn::stats

#endif // VNDN_STATS_ANALYZE_HPP
