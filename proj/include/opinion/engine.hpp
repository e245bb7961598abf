#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "opinion/model.hpp"
#include "opinion/network.hpp"
#include "opinion/params.hpp"
#include "opinion/stats.hpp"

namespace opinion {

inline constexpr std::size_t kDefaultMaxRuns = 10000;

struct InitialState {
  Population population;
  Network network;
};

/// Builds the network from streams.network and draws initial beliefs from a
/// normal(mean, sd) clamped to [0, 1] using streams.init_beliefs. sd == 0
/// places everyone at the mean without consuming draws. Funds start at 0.
InitialState init_state(const ModelParams& params, RngStreams& streams);

struct BeliefSnapshot {
  std::size_t tick = 0;
  std::vector<double> beliefs;
};

struct RunOptions {
  std::vector<std::size_t> snapshot_ticks;  // 1-based; 0 means the initial state
  bool keep_network = false;
};

struct RunResult {
  std::uint64_t params_fingerprint = 0;
  std::uint64_t seed = 0;
  bool network_connected = false;
  std::vector<TickRecord> records;
  std::vector<BeliefSnapshot> snapshots;
  std::vector<AgentKind> kinds;
  std::vector<double> final_beliefs;
  std::optional<Network> network;

  /// Per-tick median belief, the input of cross-run quantiles.
  std::vector<double> median_series() const;
};

/// Stable 64-bit hash of every field of `params`.
std::uint64_t fingerprint(const ModelParams& params);

/// Deterministic in (params, seed). Params must already be validated.
RunResult run(const ModelParams& params, std::uint64_t seed, const RunOptions& options = {});

/// Calls job(i) for i in [0, count) on up to `workers` threads (0 picks the
/// hardware concurrency). The first exception by job index is rethrown.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& job);

/// Independent runs, returned ordered by seed.
std::vector<RunResult> run_ensemble(const ModelParams& params, std::span<const std::uint64_t> seeds,
                                    const RunOptions& options = {}, std::size_t workers = 1);

using AxisValue = std::variant<double, std::string>;

std::string format_axis_value(const AxisValue& v);

struct SweepAxis {
  std::string name;
  std::vector<AxisValue> values;

  bool operator==(const SweepAxis&) const = default;
};

/// Names accepted as sweep axes.
std::span<const std::string_view> sweepable_fields();

/// Sets one named field. Throws ConfigError for unknown names or values of
/// the wrong type.
void apply_axis_value(ModelParams& params, const std::string& name, const AxisValue& value);

struct SweepOptions {
  std::size_t seeds_per_cell = 10;
  std::uint64_t base_seed = 1;
  std::optional<TickWindow> window;  // default: last 10% of each cell's horizon
  std::size_t max_runs = kDefaultMaxRuns;
  std::size_t workers = 1;
};

struct ReplicateSummary {
  std::uint64_t seed = 0;
  double steady_median = 0.0;
  double steady_sd = 0.0;
  double final_median = 0.0;
};

struct SweepCell {
  std::vector<AxisValue> coords;  // one per axis, in declaration order
  std::uint64_t canonical_index = 0;
  std::vector<ReplicateSummary> replicates;
  ReplicateSummary mean;  // seed unused
};

struct SweepResult {
  std::vector<SweepAxis> axes;
  std::vector<SweepCell> cells;  // row-major over axes, last axis fastest
  std::size_t seeds_per_cell = 0;
};

/// Cartesian product of the axes. Replicate r of a cell runs with
/// derive_seed(base_seed, canonical_index, r), where canonical_index is the
/// cell's row-major index after sorting axes by name; cell identity and
/// results therefore do not depend on axis declaration order.
/// Throws ConfigError for unknown axes, invalid cells, bad windows or a grid
/// exceeding max_runs.
SweepResult sweep(const ModelParams& base, std::span<const SweepAxis> axes,
                  const SweepOptions& options);

}  // namespace opinion
