#include "opinion/params.hpp"

#include <cmath>

namespace opinion {

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(key + ": " + message), key_(std::move(key)) {}

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::none: return "none";
    case Strategy::random: return "random";
    case Strategy::efficient: return "efficient";
    case Strategy::influencer: return "influencer";
  }
  return "none";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "none") return Strategy::none;
  if (name == "random") return Strategy::random;
  if (name == "efficient") return Strategy::efficient;
  if (name == "influencer") return Strategy::influencer;
  return std::nullopt;
}

std::string_view to_string(NetworkKind k) {
  switch (k) {
    case NetworkKind::random: return "random";
    case NetworkKind::watts_strogatz: return "watts_strogatz";
  }
  return "random";
}

std::optional<NetworkKind> parse_network_kind(std::string_view name) {
  if (name == "random") return NetworkKind::random;
  if (name == "watts_strogatz") return NetworkKind::watts_strogatz;
  return std::nullopt;
}

namespace {

void require_unit(const char* key, double v) {
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
    throw ConfigError(key, "must lie in [0, 1], got " + std::to_string(v));
  }
}

void require_non_negative(const char* key, double v) {
  if (!std::isfinite(v) || v < 0.0) {
    throw ConfigError(key, "must be finite and >= 0, got " + std::to_string(v));
  }
}

}  // namespace

void validate(const ModelParams& p) {
  if (p.n_b < 1) throw ConfigError("n_b", "at least one type-B agent required");
  if (p.population() < 2) throw ConfigError("n_a", "population must be >= 2");
  require_unit("interest_a", p.interest_a);
  require_unit("interest_b", p.interest_b);
  require_unit("mu", p.mu);
  require_unit("gamma_a", p.gamma_a);
  require_unit("gamma_b", p.gamma_b);
  require_non_negative("pi_max", p.pi_max);
  require_unit("init_belief_mean", p.init_belief_mean);
  require_non_negative("init_belief_sd", p.init_belief_sd);
  if ((p.gamma_a > 0.0 || p.gamma_b > 0.0) && p.interest_a == p.interest_b) {
    throw ConfigError("interest_a",
                      "must differ from interest_b when signals are active");
  }

  const std::size_t n = p.population();
  switch (p.network.kind) {
    case NetworkKind::random:
      require_unit("network.p", p.network.p);
      break;
    case NetworkKind::watts_strogatz:
      if (p.network.k < 1) throw ConfigError("network.k", "must be >= 1");
      if (n <= 2 * p.network.k) {
        throw ConfigError("network.k", "population " + std::to_string(n) +
                                           " must exceed 2k = " +
                                           std::to_string(2 * p.network.k));
      }
      require_unit("network.beta", p.network.beta);
      break;
  }
  validate_cost(p.cost, p.n_a, p.n_b, p.pi_max);
}

void validate_cost(const CostParams& cost, std::size_t n_a, std::size_t n_b,
                   double pi_max) {
  if (!std::isfinite(cost.a) || cost.a <= 0.0) {
    throw ConfigError("cost.a", "linear coefficient must be > 0");
  }
  if (!std::isfinite(cost.b) || cost.b <= 0.0) {
    throw ConfigError("cost.b", "quadratic coefficient must be > 0");
  }
  const double total_cost_slope = static_cast<double>(n_b) * cost.a;
  const double total_profit_slope = 2.0 * static_cast<double>(n_a) * pi_max;
  if (!(total_cost_slope > total_profit_slope)) {
    throw ConfigError("cost.a",
                      "n_b * a = " + std::to_string(total_cost_slope) +
                          " must exceed 2 * n_a * pi_max = " +
                          std::to_string(total_profit_slope));
  }
}

}  // namespace opinion
