#include "vndn/mobility/trace.hpp"
#include "vndn/scenario/campaign.hpp"
#include "vndn/scenario/simulation.hpp"
#include "vndn/stats/analyze.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>

namespace fs = std::filesystem;

namespace {

struct GenTracesArgs {
  std::uint32_t runs = 0;
  std::uint64_t seed = 42;
  std::string outDir;
};

int
cmdGenTraces(const GenTracesArgs& args)
{
  fs::create_directories(args.outDir);
  vndn::Manifest manifest;
  manifest.set("tool_version", VNDN_VERSION);
  manifest.set("kind", "traces");
  manifest.set("seed", std::to_string(args.seed));
  manifest.set("runs", std::to_string(args.runs));
  for (std::uint32_t k = 1; k <= args.runs; ++k) {
    std::string name = vndn::mobility::traceFileName(k);
    std::string csv = vndn::mobility::emitCsv(vndn::mobility::generateTrace(args.seed + k));
    vndn::writeFile((fs::path(args.outDir) / name).string(), csv);
    manifest.setFileHash(name, csv);
  }
  manifest.write((fs::path(args.outDir) / "manifest").string());
  std::printf("wrote %u traces to %s\n", args.runs, args.outDir.c_str());
  return 0;
}

struct SimulateArgs {
  std::string instance;
  std::string tracePath;
  std::string outDir;
  std::string configPath;
  std::uint64_t seed = 42;
  std::uint32_t replication = 1;
  bool frameLog = false;
  bool idealChannel = false;
};

int
cmdSimulate(const SimulateArgs& args)
{
  vndn::InstanceSpec spec = vndn::InstanceSpec::parse(args.instance);
  vndn::RunConfig cfg;
  if (!args.configPath.empty())
    cfg = vndn::RunConfig::fromConfig(vndn::Config::load(args.configPath));
  std::string traceBytes = vndn::readFile(args.tracePath);
  std::vector<vndn::VehicleTrace> traces = vndn::mobility::parseCsv(traceBytes);

  std::string frames = std::string(vndn::kFrameLogHeader) + "\n";
  vndn::SimulationOptions opts;
  opts.idealChannel = args.idealChannel;
  if (args.frameLog)
    opts.frameLog = [&frames](const vndn::FrameLogRecord& r) { frames += vndn::frameLogLine(r); };

  vndn::Simulation sim(spec, std::move(traces), cfg, args.seed, args.replication, opts);
  vndn::RunMetrics m = sim.run();

  fs::create_directories(args.outDir);
  std::string totals =
    std::string(vndn::kTotalsHeader) + "\n" + vndn::totalsRows(spec, args.replication, m);
  std::string ts =
    std::string(vndn::kTimeseriesHeader) + "\n" + vndn::timeseriesRows(spec, args.replication, m);
  std::string mac = std::string(vndn::kMacHeader) + "\n" + vndn::macRow(spec, args.replication, m);

  vndn::Manifest manifest = vndn::runManifest(spec, args.replication, args.seed, cfg, traceBytes);
  auto emit = [&](const char* name, const std::string& content) {
    vndn::writeFile((fs::path(args.outDir) / name).string(), content);
    manifest.setFileHash(name, content);
  };
  emit("totals.csv", totals);
  emit("timeseries.csv", ts);
  emit("mac.csv", mac);
  if (args.frameLog)
    emit("frames.log", frames);
  manifest.write((fs::path(args.outDir) / "manifest").string());

  const vndn::AppTotals total = m.totals();
  std::printf("%s replication %u: sent %llu, received %llu\n", spec.id.c_str(), args.replication,
              static_cast<unsigned long long>(total.interestsSent),
              static_cast<unsigned long long>(total.dataReceived));
  return 0;
}

struct CampaignArgs {
  std::string tracesDir;
  std::string outDir;
  std::string configPath;
  std::uint64_t seed = 42;
  unsigned jobs = 1;
  std::uint32_t replications = 31;
  bool resume = false;
};

int
cmdCampaign(const CampaignArgs& args)
{
  vndn::CampaignOptions opts;
  opts.tracesDir = args.tracesDir;
  opts.outDir = args.outDir;
  if (!args.configPath.empty())
    opts.config = vndn::RunConfig::fromConfig(vndn::Config::load(args.configPath));
  opts.seed = args.seed;
  opts.jobs = args.jobs;
  opts.resume = args.resume;
  opts.replications = args.replications;
  vndn::CampaignPaths paths = vndn::runCampaign(opts);
  std::printf("campaign complete: %u runs executed, %u reused\n", paths.executed, paths.reused);
  std::printf("results: %s\n", paths.totals.c_str());
  return 0;
}

struct AnalyzeArgs {
  std::string resultsPath;
  std::string timeseriesPath;
  std::string outDir;
};

int
cmdAnalyze(const AnalyzeArgs& args)
{
  std::string timeseries = args.timeseriesPath;
  if (timeseries.empty()) {
    // default to the sibling written by the campaign, when present
    fs::path sibling = fs::path(args.resultsPath).parent_path() / "timeseries.csv";
    if (fs::exists(sibling))
      timeseries = sibling.string();
  }
  vndn::stats::AnalyzePaths paths = vndn::stats::analyze(args.resultsPath, timeseries, args.outDir);
  std::printf("report written: %s\n", paths.pairwise.c_str());
  return 0;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"deterministic wireless NDN deployment study"};
  app.require_subcommand(1);

  GenTracesArgs genArgs;
  CLI::App* gen = app.add_subcommand("gen-traces", "generate vehicle arrival traces");
  gen->add_option("--runs", genArgs.runs, "number of trace files")->required();
  gen->add_option("--seed", genArgs.seed, "base seed (trace k uses seed+k)");
  gen->add_option("--out", genArgs.outDir, "output directory")->required();

  SimulateArgs simArgs;
  CLI::App* sim = app.add_subcommand("simulate", "run one instance against one trace");
  sim->add_option("--instance", simArgs.instance, "native-1|native-2|overlay-1|overlay-2")
    ->required();
  sim->add_option("--trace", simArgs.tracePath, "trace file")->required();
  sim->add_option("--out", simArgs.outDir, "output directory")->required();
  sim->add_option("--seed", simArgs.seed, "campaign seed");
  sim->add_option("--replication", simArgs.replication, "replication number (labels RNG streams)");
  sim->add_option("--config", simArgs.configPath, "key=value run configuration");
  sim->add_flag("--frame-log", simArgs.frameLog, "write per-frame wireless channel log");
  sim->add_flag("--ideal-channel", simArgs.idealChannel,
                "bypass contention: every frame is delivered");

  CampaignArgs campArgs;
  CLI::App* camp = app.add_subcommand("campaign", "run every instance x replication");
  camp->add_option("--traces", campArgs.tracesDir, "directory with trace files")->required();
  camp->add_option("--out", campArgs.outDir, "output directory")->required();
  camp->add_option("--jobs", campArgs.jobs, "parallel workers")->check(CLI::Range(1u, 64u));
  camp->add_option("--seed", campArgs.seed, "campaign seed");
  camp->add_option("--config", campArgs.configPath, "key=value run configuration");
  camp->add_option("--replications", campArgs.replications, "replications per instance")
    ->check(CLI::Range(1u, 1000u));
  camp->add_flag("--resume", campArgs.resume, "reuse finished runs from a prior campaign");

  AnalyzeArgs anaArgs;
  CLI::App* ana = app.add_subcommand("analyze", "statistical comparison of campaign results");
  ana->add_option("--results", anaArgs.resultsPath, "combined totals file")->required();
  ana->add_option("--timeseries", anaArgs.timeseriesPath,
                  "combined per-second file (default: sibling timeseries.csv)");
  ana->add_option("--out", anaArgs.outDir, "report directory")->required();

  try {
    app.parse(argc, argv);
    if (gen->parsed())
      return cmdGenTraces(genArgs);
    if (sim->parsed())
      return cmdSimulate(simArgs);
    if (camp->parsed())
      return cmdCampaign(campArgs);
    return cmdAnalyze(anaArgs);
  }
  catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(vndn::ErrorCode::kUsage);
  }
  catch (const vndn::Error& e) {
    std::fprintf(stderr, "vndn: %s\n", e.what());
    return e.exitCode();
  }
  catch (const std::exception& e) {
    std::fprintf(stderr, "vndn: %s\n", e.what());
    return static_cast<int>(vndn::ErrorCode::kRuntime);
  }
}
