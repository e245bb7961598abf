// opinion: command-line front end for single runs, ensembles and sweeps.
//
//   opinion validate --config cfg.json
//   opinion run      --config cfg.json --seed 7 [--seeds 50] --out out/run
//   opinion sweep    --config sweep.json --seeds 10 --parallel 8 --out out/sweep
//
// Exit codes: 0 success, 2 configuration error, 3 runtime or I/O error.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "opinion/commands.hpp"
#include "opinion/config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> seeds;
  std::optional<std::string> out;
  std::optional<std::size_t> parallel;
  std::optional<std::size_t> max_runs;
  std::vector<std::size_t> snapshot_ticks;
  bool dump_network = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "JSON config (or a meta.json to replay)");
  cmd->add_option("--seed", o.seed, "master seed (run) or base seed (sweep)");
  cmd->add_option("--seeds", o.seeds, "ensemble size (run) or seeds per cell (sweep)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--parallel", o.parallel, "worker threads, 0 = all cores");
}

opinion::Config resolve(const Overrides& o) {
  opinion::Config c = o.config_path.empty() ? opinion::parse_config(nlohmann::ordered_json::object())
                                            : opinion::load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.seeds) c.seeds = *o.seeds;
  if (o.out) c.output_dir = *o.out;
  if (o.parallel) c.parallel = *o.parallel;
  if (o.max_runs) c.max_runs = *o.max_runs;
  if (!o.snapshot_ticks.empty()) c.snapshot_ticks = o.snapshot_ticks;
  if (o.dump_network) c.dump_network = true;
  opinion::validate(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opinion dynamics with conflicting interests: simulation and sweeps"};
  app.set_version_flag("--version", std::string(opinion::kVersion));
  app.require_subcommand(1);

  Overrides o;
  auto* run_cmd = app.add_subcommand("run", "single run or seed ensemble");
  add_common(run_cmd, o);
  run_cmd->add_option("--snapshot-ticks", o.snapshot_ticks, "ticks whose beliefs are saved")
      ->delimiter(',');
  run_cmd->add_flag("--dump-network", o.dump_network, "write network.edges");

  auto* sweep_cmd = app.add_subcommand("sweep", "parameter grid over the config's axes");
  add_common(sweep_cmd, o);
  sweep_cmd->add_option("--max-runs", o.max_runs, "budget guard on grid size x seeds");

  auto* validate_cmd = app.add_subcommand("validate", "check a config and print it resolved");
  validate_cmd->add_option("--config", o.config_path, "JSON config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  opinion::Config config;
  try {
    config = resolve(o);
  } catch (const opinion::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*validate_cmd) {
      std::cout << opinion::config_to_json(config).dump(2) << '\n';
    } else if (*run_cmd) {
      opinion::cmd_run(config, config.output_dir);
    } else if (*sweep_cmd) {
      opinion::cmd_sweep(config, config.output_dir);
    }
  } catch (const opinion::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return 0;
}
