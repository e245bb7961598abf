#include "opinion/engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

namespace opinion {

InitialState init_state(const ModelParams& params, RngStreams& streams) {
  const std::size_t n = params.population();
  Network net = build_network(params.network, n, streams.network);

  std::vector<double> beliefs(n, params.init_belief_mean);
  if (params.init_belief_sd > 0.0) {
    std::normal_distribution<double> draw(params.init_belief_mean, params.init_belief_sd);
    for (double& b : beliefs) b = std::clamp(draw(streams.init_beliefs), 0.0, 1.0);
  }
  return {Population(params.n_a, params.n_b, std::move(beliefs)), std::move(net)};
}

std::vector<double> RunResult::median_series() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.median_belief);
  return out;
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t fingerprint(const ModelParams& p) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "%zu|%zu|%.17g|%.17g|%.17g|%.17g|%.17g|%.17g|%.17g|%.17g|%d|%.17g|%zu|%.17g|%d|%zu|"
                "%.17g|%.17g",
                p.n_a, p.n_b, p.interest_a, p.interest_b, p.mu, p.gamma_a, p.gamma_b, p.pi_max,
                p.init_belief_mean, p.init_belief_sd, static_cast<int>(p.network.kind), p.network.p,
                p.network.k, p.network.beta, static_cast<int>(p.strategy), p.ticks, p.cost.a,
                p.cost.b);
  return fnv1a(buf);
}

RunResult run(const ModelParams& params, std::uint64_t seed, const RunOptions& options) {
  RunResult result;
  result.params_fingerprint = fingerprint(params);
  result.seed = seed;

  RngStreams streams(seed);
  auto [pop, net] = init_state(params, streams);
  result.network_connected = is_connected(net);

  std::vector<std::size_t> wanted = options.snapshot_ticks;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
  auto next_snapshot = wanted.begin();
  auto maybe_snapshot = [&](std::size_t t) {
    if (next_snapshot != wanted.end() && *next_snapshot == t) {
      const auto b = pop.beliefs();
      result.snapshots.push_back({t, std::vector<double>(b.begin(), b.end())});
      ++next_snapshot;
    }
  };

  maybe_snapshot(0);
  result.records.reserve(params.ticks);
  for (std::size_t t = 1; t <= params.ticks; ++t) {
    result.records.push_back(tick(pop, net, params, streams, t));
    maybe_snapshot(t);
  }

  result.kinds.reserve(pop.size());
  for (AgentId i = 0; i < pop.size(); ++i) result.kinds.push_back(pop.kind(i));
  const auto b = pop.beliefs();
  result.final_beliefs.assign(b.begin(), b.end());
  if (options.keep_network) result.network = std::move(net);
  return result;
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& job) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  std::size_t first_error_index = count;

  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
      try {
        job(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (i < first_error_index) {
          first_error_index = i;
          first_error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  pool.clear();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<RunResult> run_ensemble(const ModelParams& params, std::span<const std::uint64_t> seeds,
                                    const RunOptions& options, std::size_t workers) {
  std::vector<std::uint64_t> ordered(seeds.begin(), seeds.end());
  std::stable_sort(ordered.begin(), ordered.end());
  std::vector<RunResult> results(ordered.size());
  parallel_for(ordered.size(), workers,
               [&](std::size_t i) { results[i] = run(params, ordered[i], options); });
  return results;
}

std::string format_axis_value(const AxisValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v));
  return buf;
}

namespace {

constexpr std::array<std::string_view, 18> kSweepable = {
    "n_a",    "n_b",        "interest_a", "interest_b", "mu",        "gamma_a",
    "gamma_b", "pi_max",    "init_belief_mean", "init_belief_sd", "strategy", "ticks",
    "network.kind", "network.p", "network.k", "network.beta", "cost.a", "cost.b"};

double as_number(const std::string& key, const AxisValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  throw ConfigError(key, "expected a number, got \"" + std::get<std::string>(v) + "\"");
}

std::size_t as_count(const std::string& key, const AxisValue& v) {
  const double d = as_number(key, v);
  if (!(d >= 0.0) || d != std::floor(d) || d > 1e15) {
    throw ConfigError(key, "expected a non-negative integer");
  }
  return static_cast<std::size_t>(d);
}

const std::string& as_text(const std::string& key, const AxisValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw ConfigError(key, "expected a string");
}

}  // namespace

std::span<const std::string_view> sweepable_fields() { return kSweepable; }

void apply_axis_value(ModelParams& p, const std::string& name, const AxisValue& value) {
  if (name == "n_a") p.n_a = as_count(name, value);
  else if (name == "n_b") p.n_b = as_count(name, value);
  else if (name == "interest_a") p.interest_a = as_number(name, value);
  else if (name == "interest_b") p.interest_b = as_number(name, value);
  else if (name == "mu") p.mu = as_number(name, value);
  else if (name == "gamma_a") p.gamma_a = as_number(name, value);
  else if (name == "gamma_b") p.gamma_b = as_number(name, value);
  else if (name == "pi_max") p.pi_max = as_number(name, value);
  else if (name == "init_belief_mean") p.init_belief_mean = as_number(name, value);
  else if (name == "init_belief_sd") p.init_belief_sd = as_number(name, value);
  else if (name == "ticks") p.ticks = as_count(name, value);
  else if (name == "network.p") p.network.p = as_number(name, value);
  else if (name == "network.k") p.network.k = as_count(name, value);
  else if (name == "network.beta") p.network.beta = as_number(name, value);
  else if (name == "cost.a") p.cost.a = as_number(name, value);
  else if (name == "cost.b") p.cost.b = as_number(name, value);
  else if (name == "strategy") {
    const auto s = parse_strategy(as_text(name, value));
    if (!s) throw ConfigError(name, "unknown strategy \"" + as_text(name, value) + "\"");
    p.strategy = *s;
  } else if (name == "network.kind") {
    const auto k = parse_network_kind(as_text(name, value));
    if (!k) throw ConfigError(name, "unknown network kind \"" + as_text(name, value) + "\"");
    p.network.kind = *k;
  } else {
    throw ConfigError("sweep.axes." + name, "not a sweepable parameter");
  }
}

SweepResult sweep(const ModelParams& base, std::span<const SweepAxis> axes,
                  const SweepOptions& options) {
  SweepResult result;
  result.axes.assign(axes.begin(), axes.end());
  result.seeds_per_cell = options.seeds_per_cell;

  std::size_t cell_count = 1;
  for (const auto& axis : axes) {
    if (std::find(kSweepable.begin(), kSweepable.end(), axis.name) == kSweepable.end()) {
      throw ConfigError("sweep.axes." + axis.name, "not a sweepable parameter");
    }
    if (axis.values.empty()) throw ConfigError("sweep.axes." + axis.name, "no values");
    for (const auto& other : axes) {
      if (&other != &axis && other.name == axis.name) {
        throw ConfigError("sweep.axes." + axis.name, "declared twice");
      }
    }
    cell_count *= axis.values.size();
  }
  if (options.seeds_per_cell == 0) throw ConfigError("seeds", "must be >= 1");
  const std::size_t total_runs = cell_count * options.seeds_per_cell;
  if (total_runs > options.max_runs) {
    throw ConfigError("max_runs", std::to_string(total_runs) + " runs exceed the budget of " +
                                      std::to_string(options.max_runs));
  }

  // Canonical (name-sorted) axis order defines each cell's seed identity.
  std::vector<std::size_t> canonical(axes.size());
  std::iota(canonical.begin(), canonical.end(), std::size_t{0});
  std::sort(canonical.begin(), canonical.end(),
            [&](std::size_t x, std::size_t y) { return axes[x].name < axes[y].name; });

  std::vector<ModelParams> cell_params(cell_count, base);
  std::vector<TickWindow> windows(cell_count);
  result.cells.resize(cell_count);
  for (std::size_t c = 0; c < cell_count; ++c) {
    std::vector<std::size_t> pos(axes.size());
    std::size_t rest = c;
    for (std::size_t a = axes.size(); a-- > 0;) {
      pos[a] = rest % axes[a].values.size();
      rest /= axes[a].values.size();
    }
    std::uint64_t canon = 0;
    for (std::size_t a : canonical) canon = canon * axes[a].values.size() + pos[a];

    auto& cell = result.cells[c];
    cell.canonical_index = canon;
    for (std::size_t a = 0; a < axes.size(); ++a) {
      cell.coords.push_back(axes[a].values[pos[a]]);
      apply_axis_value(cell_params[c], axes[a].name, axes[a].values[pos[a]]);
    }
    validate(cell_params[c]);
    windows[c] = options.window.value_or(default_window(cell_params[c].ticks));
    if (windows[c].first == 0 || windows[c].last < windows[c].first ||
        windows[c].last > cell_params[c].ticks) {
      throw ConfigError("steady_window", "window [" + std::to_string(windows[c].first) + ", " +
                                             std::to_string(windows[c].last) +
                                             "] not within the horizon of " +
                                             std::to_string(cell_params[c].ticks) + " ticks");
    }
    cell.replicates.resize(options.seeds_per_cell);
  }

  parallel_for(total_runs, options.workers, [&](std::size_t job) {
    const std::size_t c = job / options.seeds_per_cell;
    const std::size_t r = job % options.seeds_per_cell;
    auto& cell = result.cells[c];
    const std::uint64_t seed = derive_seed(options.base_seed, cell.canonical_index, r);
    const RunResult run_result = run(cell_params[c], seed);
    const SteadySummary s = steady_summary(run_result.records, windows[c]);
    cell.replicates[r] = {seed, s.median, s.sd, run_result.records.back().median_belief};
  });

  for (auto& cell : result.cells) {
    for (const auto& rep : cell.replicates) {
      cell.mean.steady_median += rep.steady_median;
      cell.mean.steady_sd += rep.steady_sd;
      cell.mean.final_median += rep.final_median;
    }
    const auto k = static_cast<double>(cell.replicates.size());
    cell.mean.steady_median /= k;
    cell.mean.steady_sd /= k;
    cell.mean.final_median /= k;
  }
  return result;
}

}  // namespace opinion
