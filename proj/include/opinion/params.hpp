#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opinion {

/// A rejected parameter. `key()` is the JSON-style path of the offending
/// field, e.g. "network.k".
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

enum class Strategy { none, random, efficient, influencer };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

enum class NetworkKind { random, watts_strogatz };

std::string_view to_string(NetworkKind k);
std::optional<NetworkKind> parse_network_kind(std::string_view name);

/// Topology of the social graph. `p` applies to G(n, p); `k` (neighbours per
/// side) and `beta` (rewire probability) apply to Watts-Strogatz.
struct NetworkSpec {
  NetworkKind kind = NetworkKind::random;
  double p = 0.025;
  std::size_t k = 5;
  double beta = 0.1;

  bool operator==(const NetworkSpec&) const = default;
};

/// Coefficients of the per-B-agent cost g(l) = a*l + b*l^2.
struct CostParams {
  double a = 1.1;
  double b = 1.0;

  bool operator==(const CostParams&) const = default;
};

/// Exogenous model parameters. Probabilities are fractions in [0, 1].
/// Defaults are the baseline calibration with the variable parameters set
/// to mu = 0.025, gamma_b = 0.005, pi_max = 500 and random targeting.
struct ModelParams {
  std::size_t n_a = 1;
  std::size_t n_b = 999;
  double interest_a = 1.0;
  double interest_b = 0.0;
  double mu = 0.025;
  double gamma_a = 1.0;
  double gamma_b = 0.005;
  double pi_max = 500.0;
  double init_belief_mean = 0.5;
  double init_belief_sd = 0.0;
  NetworkSpec network{};
  Strategy strategy = Strategy::random;
  std::size_t ticks = 5000;
  CostParams cost{};

  std::size_t population() const noexcept { return n_a + n_b; }

  bool operator==(const ModelParams&) const = default;
};

/// Throws ConfigError naming the first violated constraint.
void validate(const ModelParams& params);

/// n_b * a > 2 * n_a * pi_max, a > 0 and b > 0. Throws ConfigError("cost.*").
void validate_cost(const CostParams& cost, std::size_t n_a, std::size_t n_b,
                   double pi_max);

}  // namespace opinion
