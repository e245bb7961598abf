#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "opinion/params.hpp"

namespace opinion {

struct TickRecord;

/// Median; even counts average the two central order statistics.
/// Throws std::invalid_argument on empty input.
double median(std::span<const double> values);

/// Population (divide-by-n) standard deviation. Throws on empty input.
double std_dev(std::span<const double> values);

/// Empirical quantile with linear interpolation between the order statistics
/// at positions floor(q*(n-1)) and ceil(q*(n-1)). `sorted` must be ascending.
double quantile_sorted(std::span<const double> sorted, double q);

/// Inclusive 1-based tick range.
struct TickWindow {
  std::size_t first = 4501;
  std::size_t last = 5000;

  std::size_t length() const noexcept { return last - first + 1; }
  bool operator==(const TickWindow&) const = default;
};

/// The last 10% of a horizon: [ticks - ticks/10 + 1, ticks]; 4501..5000 for
/// 5000 ticks. Horizons shorter than 10 ticks use the final tick alone.
TickWindow default_window(std::size_t ticks);

struct SteadySummary {
  double median = 0.0;  // mean of per-tick median beliefs over the window
  double sd = 0.0;      // mean of per-tick belief standard deviations
};

/// Throws std::invalid_argument if the window is empty, inverted, starts at
/// 0 or extends past the records.
SteadySummary steady_summary(std::span<const TickRecord> records, TickWindow window);

/// result[q][t] is the q-quantile over runs of series[run][t]. Throws
/// std::invalid_argument on no runs, mismatched lengths or q outside [0, 1].
std::vector<std::vector<double>> cross_run_quantiles(
    std::span<const std::vector<double>> series, std::span<const double> qs);

struct DensityEstimate {
  std::vector<double> grid;
  std::vector<double> density;
  double bandwidth = 0.0;
};

inline constexpr std::size_t kKdeGridPoints = 512;
inline constexpr double kKdeMinBandwidth = 1e-3;

/// Silverman's rule 0.9 * min(sd, IQR/1.34) * n^(-1/5). A zero spread
/// measure is skipped in favour of the other; the result is floored at
/// kKdeMinBandwidth.
double silverman_bandwidth(std::span<const double> values);

/// Gaussian KDE on a uniform 512-point grid over [0, 1], with reflection at
/// both boundaries so that mass stays inside the unit interval. Throws
/// std::invalid_argument for fewer than two values or a non-positive
/// explicit bandwidth.
DensityEstimate kde(std::span<const double> values,
                    std::optional<double> bandwidth = std::nullopt);

/// Per-B-agent cost a*l + b*l^2.
double cost(double law, const CostParams& cost_params);

/// n_a * pi(l) - n_b * g(l).
double total_surplus(double law, const ModelParams& params);

}  // namespace opinion
