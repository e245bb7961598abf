#include "opinion/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opinion/model.hpp"

namespace opinion {

double median(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("median of empty sample");
  std::vector<double> v(values.begin(), values.end());
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double std_dev(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("std_dev of empty sample");
  double mean = 0.0;
  for (double x : values) mean += x;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double x : values) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

double quantile_sorted(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile level outside [0, 1]");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

TickWindow default_window(std::size_t ticks) {
  if (ticks == 0) return {1, 0};
  const std::size_t tail = std::max<std::size_t>(ticks / 10, 1);
  return {ticks - tail + 1, ticks};
}

SteadySummary steady_summary(std::span<const TickRecord> records, TickWindow window) {
  if (window.first == 0 || window.last < window.first || window.last > records.size()) {
    throw std::invalid_argument("steady window [" + std::to_string(window.first) + ", " +
                                std::to_string(window.last) + "] not within " +
                                std::to_string(records.size()) + " ticks");
  }
  SteadySummary s;
  for (std::size_t t = window.first; t <= window.last; ++t) {
    s.median += records[t - 1].median_belief;
    s.sd += records[t - 1].belief_sd;
  }
  const auto len = static_cast<double>(window.length());
  s.median /= len;
  s.sd /= len;
  return s;
}

std::vector<std::vector<double>> cross_run_quantiles(
    std::span<const std::vector<double>> series, std::span<const double> qs) {
  if (series.empty()) throw std::invalid_argument("cross_run_quantiles: no runs");
  const std::size_t ticks = series.front().size();
  for (const auto& s : series) {
    if (s.size() != ticks) throw std::invalid_argument("cross_run_quantiles: run lengths differ");
  }
  for (double q : qs) {
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("quantile level outside [0, 1]");
  }

  std::vector<std::vector<double>> out(qs.size(), std::vector<double>(ticks));
  std::vector<double> column(series.size());
  for (std::size_t t = 0; t < ticks; ++t) {
    for (std::size_t r = 0; r < series.size(); ++r) column[r] = series[r][t];
    std::sort(column.begin(), column.end());
    for (std::size_t k = 0; k < qs.size(); ++k) out[k][t] = quantile_sorted(column, qs[k]);
  }
  return out;
}

double silverman_bandwidth(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());

  double mean = 0.0;
  for (double x : sorted) mean += x;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double x : sorted) ss += (x - mean) * (x - mean);
  const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  const double iqr = (quantile_sorted(sorted, 0.75) - quantile_sorted(sorted, 0.25)) / 1.34;

  double spread = 0.0;
  if (sd > 0.0 && iqr > 0.0) {
    spread = std::min(sd, iqr);
  } else {
    spread = std::max(sd, iqr);
  }
  const double h = 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
  return std::max(h, kKdeMinBandwidth);
}

DensityEstimate kde(std::span<const double> values, std::optional<double> bandwidth) {
  if (values.size() < 2) throw std::invalid_argument("kde needs at least two values");
  DensityEstimate est;
  if (bandwidth) {
    if (!(*bandwidth > 0.0)) throw std::invalid_argument("kde bandwidth must be > 0");
    est.bandwidth = *bandwidth;
  } else {
    est.bandwidth = silverman_bandwidth(values);
  }

  const double h = est.bandwidth;
  const double norm = 1.0 / (static_cast<double>(values.size()) * h * std::sqrt(2.0 * std::numbers::pi));
  auto kernel = [h](double u) { return std::exp(-0.5 * (u / h) * (u / h)); };

  est.grid.resize(kKdeGridPoints);
  est.density.resize(kKdeGridPoints);
  for (std::size_t g = 0; g < kKdeGridPoints; ++g) {
    const double x = static_cast<double>(g) / static_cast<double>(kKdeGridPoints - 1);
    double sum = 0.0;
    for (double v : values) {
      // Mirror images at -v and 2 - v fold the tails back into [0, 1].
      sum += kernel(x - v) + kernel(x + v) + kernel(x - (2.0 - v));
    }
    est.grid[g] = x;
    est.density[g] = sum * norm;
  }
  return est;
}

double cost(double law, const CostParams& cost_params) {
  return cost_params.a * law + cost_params.b * law * law;
}

double total_surplus(double law, const ModelParams& params) {
  return static_cast<double>(params.n_a) * profit(law, params.pi_max) -
         static_cast<double>(params.n_b) * cost(law, params.cost);
}

}  // namespace opinion
