#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "opinion/engine.hpp"
#include "opinion/params.hpp"
#include "opinion/stats.hpp"

namespace opinion {

/// Model parameters plus run controls. Every key is optional; omitted keys
/// keep the defaults below and in ModelParams.
struct Config {
  ModelParams params;
  std::uint64_t seed = 1;
  std::optional<std::size_t> seeds;  // run: 1, sweep: 10 when unset
  std::optional<TickWindow> steady_window;
  std::vector<std::size_t> snapshot_ticks;
  std::string output_dir = "out";
  std::size_t parallel = 1;
  std::size_t max_runs = kDefaultMaxRuns;
  bool dump_network = false;
  std::vector<SweepAxis> axes;

  bool operator==(const Config&) const = default;

  TickWindow window() const { return steady_window.value_or(default_window(params.ticks)); }
};

/// Parses and validates a config document. A meta.json document (an object
/// with a "config" member) is accepted and its embedded config used.
/// Throws ConfigError with the offending key path.
Config parse_config(const nlohmann::ordered_json& doc);

/// Reads `path` and calls parse_config. Parse failures are reported as
/// ConfigError with key "<file>"; a missing file as ConfigError too.
Config load_config(const std::filesystem::path& path);

/// Full resolved config; parse_config(config_to_json(c)) == c.
nlohmann::ordered_json config_to_json(const Config& config);

/// Checks every cross-field rule (model params, cost, window, snapshots).
void validate(const Config& config);

}  // namespace opinion
