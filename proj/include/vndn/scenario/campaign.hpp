#ifndef VNDN_SCENARIO_CAMPAIGN_HPP
#define VNDN_SCENARIO_CAMPAIGN_HPP

#include "results.hpp"
#include "simulation.hpp"

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <mutex>
#include <thread>
#include <vector>

namespace vndn {

struct CampaignOptions {
  std::string tracesDir;
  std::string outDir;
  RunConfig config;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  bool resume = false;
  std::uint32_t replications = 31;
  std::uint32_t expectedVehicles = mobility::kVehicleCount;
};

struct CampaignPaths {
  std::string totals;
  std::string timeseries;
  std::string mac;
  std::string manifest;
  std::uint32_t executed = 0;
  std::uint32_t reused = 0;
};

namespace detail {

struct RunTask {
  const InstanceSpec* spec;
  std::uint32_t replication;

  std::string
  id() const
  {
    return spec->id + " replication " + std::to_string(replication);
  }

  std::string
  filePrefix(const std::string& runsDir) const
  {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "-r%03u", replication);
    return runsDir + "/" + spec->id + buf;
  }
};

inline std::string
stripHeader(const std::string& csv)
{
  std::size_t nl = csv.find('\n');
  return nl == std::string::npos ? std::string() : csv.substr(nl + 1);
}

/// A prior run is reusable when its manifest's input half matches what this
/// campaign would produce and the recorded output hashes match the files on
/// disk.
inline bool
reusableRun(const std::string& prefix, const Manifest& expectedInputs)
{
  const std::string manifestPath = prefix + ".manifest";
  const std::array<std::string, 3> files = {prefix + ".totals.csv", prefix + ".timeseries.csv",
                                            prefix + ".mac.csv"};
  namespace fs = std::filesystem;
  if (!fs::exists(manifestPath))
    return false;
  for (const std::string& f : files) {
    if (!fs::exists(f))
      return false;
  }
  std::string text = readFile(manifestPath);
  if (text.compare(0, expectedInputs.text().size(), expectedInputs.text()) != 0)
    return false;
  for (const std::string& f : files) {
    std::string key = "file." + fs::path(f).filename().string() + "=" +
                      hashToHex(fnv1a64(readFile(f))) + "\n";
    if (text.find(key) == std::string::npos)
      return false;
  }
  return true;
}

} // namespace detail

/// Executes replications × instances runs (trace k is shared by all instances
/// of replication k), persists per-run results, and assembles combined files
/// in a fixed order so the output bytes are independent of --jobs.
inline CampaignPaths
runCampaign(const CampaignOptions& opts)
{
  namespace fs = std::filesystem;
  if (opts.replications < 1)
    throw ValidationError("campaign needs at least one replication");
  opts.config.validate();

  // All traces must be present and valid before any run starts.
  std::vector<std::string> traceBytes(opts.replications + 1);
  std::vector<std::vector<VehicleTrace>> traces(opts.replications + 1);
  for (std::uint32_t k = 1; k <= opts.replications; ++k) {
    std::string name = mobility::traceFileName(k);
    fs::path path = fs::path(opts.tracesDir) / name;
    if (!fs::exists(path))
      throw ValidationError("missing trace " + name + " in '" + opts.tracesDir + "'");
    traceBytes[k] = readFile(path.string());
    try {
      traces[k] = mobility::parseCsv(traceBytes[k], opts.expectedVehicles);
    }
    catch (const ValidationError& e) {
      throw ValidationError(name + ": " + e.what());
    }
  }

  const std::string runsDir = (fs::path(opts.outDir) / "runs").string();
  CampaignPaths paths;
  paths.totals = (fs::path(opts.outDir) / "totals.csv").string();
  paths.timeseries = (fs::path(opts.outDir) / "timeseries.csv").string();
  paths.mac = (fs::path(opts.outDir) / "mac.csv").string();
  paths.manifest = (fs::path(opts.outDir) / "manifest").string();

  bool priorOutput = (fs::exists(runsDir) && !fs::is_empty(runsDir)) || fs::exists(paths.totals) ||
                     fs::exists(paths.timeseries) || fs::exists(paths.mac);
  if (priorOutput && !opts.resume)
    throw ValidationError("prior output in '" + opts.outDir + "' (use --resume to continue)");
  fs::create_directories(runsDir);

  std::vector<detail::RunTask> tasks;
  for (const InstanceSpec& spec : InstanceSpec::all()) {
    for (std::uint32_t k = 1; k <= opts.replications; ++k)
      tasks.push_back(detail::RunTask{&spec, k});
  }

  std::atomic<std::size_t> nextTask{0};
  std::atomic<bool> failed{false};
  std::atomic<std::uint32_t> executed{0}, reused{0};
  std::mutex errorMutex;
  std::string errorWhat;
  ErrorCode errorCode = ErrorCode::kRuntime;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = nextTask.fetch_add(1);
      if (i >= tasks.size())
        return;
      const detail::RunTask& task = tasks[i];
      try {
        std::string prefix = task.filePrefix(runsDir);
        Manifest inputs = runManifest(*task.spec, task.replication, opts.seed, opts.config,
                                      traceBytes[task.replication]);
        if (opts.resume && detail::reusableRun(prefix, inputs)) {
          reused.fetch_add(1);
          continue;
        }
        Simulation sim(*task.spec, traces[task.replication], opts.config, opts.seed,
                       task.replication);
        RunMetrics m = sim.run();

        std::string totals =
          std::string(kTotalsHeader) + "\n" + totalsRows(*task.spec, task.replication, m);
        std::string ts =
          std::string(kTimeseriesHeader) + "\n" + timeseriesRows(*task.spec, task.replication, m);
        std::string mac = std::string(kMacHeader) + "\n" + macRow(*task.spec, task.replication, m);
        writeFile(prefix + ".totals.csv", totals);
        writeFile(prefix + ".timeseries.csv", ts);
        writeFile(prefix + ".mac.csv", mac);

        Manifest manifest = inputs;
        namespace fsp = std::filesystem;
        manifest.setFileHash(fsp::path(prefix + ".totals.csv").filename().string(), totals);
        manifest.setFileHash(fsp::path(prefix + ".timeseries.csv").filename().string(), ts);
        manifest.setFileHash(fsp::path(prefix + ".mac.csv").filename().string(), mac);
        manifest.write(prefix + ".manifest");
        executed.fetch_add(1);
      }
      catch (const Error& e) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!failed.exchange(true)) {
          errorWhat = task.id() + ": " + e.what();
          errorCode = e.code();
        }
        return;
      }
      catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(errorMutex);
        if (!failed.exchange(true))
          errorWhat = task.id() + ": " + e.what();
        return;
      }
    }
  };

  unsigned jobs = std::max(1u, opts.jobs);
  if (jobs == 1) {
    worker();
  }
  else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j)
      pool.emplace_back(worker);
    for (std::thread& t : pool)
      t.join();
  }

  if (failed.load()) {
    switch (errorCode) {
      case ErrorCode::kUsage:
        throw UsageError(errorWhat);
      case ErrorCode::kValidation:
        throw ValidationError(errorWhat);
      default:
        throw RuntimeFailure(errorWhat);
    }
  }

  // Assemble combined files in fixed task order from the per-run artifacts;
  // rereading from disk makes resumed and fresh campaigns byte-identical.
  std::string totalsAll = std::string(kTotalsHeader) + "\n";
  std::string tsAll = std::string(kTimeseriesHeader) + "\n";
  std::string macAll = std::string(kMacHeader) + "\n";
  for (const detail::RunTask& task : tasks) {
    std::string prefix = task.filePrefix(runsDir);
    totalsAll += detail::stripHeader(readFile(prefix + ".totals.csv"));
    tsAll += detail::stripHeader(readFile(prefix + ".timeseries.csv"));
    macAll += detail::stripHeader(readFile(prefix + ".mac.csv"));
  }
  writeFile(paths.totals, totalsAll);
  writeFile(paths.timeseries, tsAll);
  writeFile(paths.mac, macAll);

  Manifest manifest;
  manifest.set("tool_version", VNDN_VERSION);
  manifest.set("kind", "campaign");
  manifest.set("seed", std::to_string(opts.seed));
  manifest.set("replications", std::to_string(opts.replications));
  manifest.set("config_hash", hashToHex(opts.config.hash()));
  std::string traceHashes;
  for (std::uint32_t k = 1; k <= opts.replications; ++k)
    traceHashes += hashToHex(fnv1a64(traceBytes[k]));
  manifest.set("traces_hash", hashToHex(fnv1a64(traceHashes)));
  manifest.setFileHash("totals.csv", totalsAll);
  manifest.setFileHash("timeseries.csv", tsAll);
  manifest.setFileHash("mac.csv", macAll);
  manifest.write(paths.manifest);

  paths.executed = executed.load();
  paths.reused = reused.load();
  return paths;
}

} // namespace vndn

#endif // VNDN_SCENARIO_CAMPAIGN_HPP
