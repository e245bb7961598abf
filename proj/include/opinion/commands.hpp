#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "opinion/config.hpp"

namespace opinion {

inline constexpr const char* kVersion = "0.1.0";

/// File system failure; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quantile levels written to quantiles.csv for ensembles.
inline constexpr double kEnsembleQuantiles[] = {0.05, 0.25, 0.5, 0.75, 0.95};

/// One run (seeds unset or 1) writes ticks.csv, final_beliefs.csv, meta.json
/// and, when requested, snapshots.csv and network.edges into `out_dir`.
/// An ensemble of N seeds runs seeds seed..seed+N-1 into seed_<s>/
/// subdirectories and adds quantiles.csv over their median series.
void cmd_run(const Config& config, const std::filesystem::path& out_dir);

/// Writes sweep.csv, sweep_agg.csv and meta.json into `out_dir`.
void cmd_sweep(const Config& config, const std::filesystem::path& out_dir);

}  // namespace opinion
