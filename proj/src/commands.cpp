#include "opinion/commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>

#include "opinion/engine.hpp"
#include "opinion/output.hpp"

namespace opinion {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
}

void write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  body(out);
  out.flush();
  if (!out) throw IoError("write failed for " + path.string());
}

std::string hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

void write_single_run(const Config& config, std::uint64_t seed, const fs::path& dir,
                      std::vector<double>* median_series) {
  const auto start = std::chrono::steady_clock::now();
  RunOptions options;
  options.snapshot_ticks = config.snapshot_ticks;
  options.keep_network = config.dump_network;
  const RunResult result = run(config.params, seed, options);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ensure_dir(dir);
  write_file(dir / "ticks.csv", [&](std::ostream& o) { write_ticks_csv(o, result.records); });
  write_file(dir / "final_beliefs.csv",
             [&](std::ostream& o) { write_final_beliefs_csv(o, result.kinds, result.final_beliefs); });
  if (!config.snapshot_ticks.empty()) {
    write_file(dir / "snapshots.csv",
               [&](std::ostream& o) { write_snapshots_csv(o, result.snapshots, result.kinds); });
  }
  if (result.network) {
    write_file(dir / "network.edges", [&](std::ostream& o) { write_edge_list(o, *result.network); });
  }

  Config echo = config;
  echo.seed = seed;
  echo.seeds.reset();
  json meta = {{"version", kVersion},
               {"seed", seed},
               {"params_fingerprint", hex(result.params_fingerprint)},
               {"network_connected", result.network_connected},
               {"wall_time_seconds", wall},
               {"config", config_to_json(echo)}};
  write_file(dir / "meta.json", [&](std::ostream& o) { o << meta.dump(2) << '\n'; });

  if (median_series) *median_series = result.median_series();
}

}  // namespace

void cmd_run(const Config& config, const fs::path& out_dir) {
  ensure_dir(out_dir);
  const std::size_t count = config.seeds.value_or(1);
  if (count == 1) {
    write_single_run(config, config.seed, out_dir, nullptr);
    return;
  }

  std::vector<std::vector<double>> medians(count);
  parallel_for(count, config.parallel, [&](std::size_t r) {
    const std::uint64_t seed = config.seed + r;
    write_single_run(config, seed, out_dir / ("seed_" + std::to_string(seed)), &medians[r]);
  });
  const auto quantiles = cross_run_quantiles(medians, kEnsembleQuantiles);
  write_file(out_dir / "quantiles.csv",
             [&](std::ostream& o) { write_quantiles_csv(o, kEnsembleQuantiles, quantiles); });
}

void cmd_sweep(const Config& config, const fs::path& out_dir) {
  const auto start = std::chrono::steady_clock::now();
  SweepOptions options;
  options.seeds_per_cell = config.seeds.value_or(10);
  options.base_seed = config.seed;
  options.window = config.steady_window;
  options.max_runs = config.max_runs;
  options.workers = config.parallel;
  const SweepResult result = sweep(config.params, config.axes, options);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  ensure_dir(out_dir);
  write_file(out_dir / "sweep.csv", [&](std::ostream& o) { write_sweep_csv(o, result); });
  write_file(out_dir / "sweep_agg.csv", [&](std::ostream& o) { write_sweep_agg_csv(o, result); });
  json meta = {{"version", kVersion},
               {"runs", result.cells.size() * result.seeds_per_cell},
               {"wall_time_seconds", wall},
               {"config", config_to_json(config)}};
  write_file(out_dir / "meta.json", [&](std::ostream& o) { o << meta.dump(2) << '\n'; });
}

}  // namespace opinion
