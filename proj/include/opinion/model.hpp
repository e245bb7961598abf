#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "opinion/network.hpp"
#include "opinion/params.hpp"
#include "opinion/rng.hpp"

namespace opinion {

enum class AgentKind : std::uint8_t { A, B };

char to_char(AgentKind k);

/// Value snapshot of one agent.
struct AgentState {
  AgentKind kind;
  double belief;          // finalized belief of the last completed tick
  double working_belief;  // intra-tick belief
  double funds;           // always 0 for type B
};

/// Agent states stored column-wise. Agents 0..n_a-1 are type A.
class Population {
 public:
  Population() = default;
  Population(std::size_t n_a, std::size_t n_b, std::vector<double> initial_beliefs);

  std::size_t size() const noexcept { return kinds_.size(); }
  std::size_t n_a() const noexcept { return n_a_; }

  AgentState agent(AgentId i) const {
    return {kinds_[i], beliefs_[i], working_[i], funds_[i]};
  }
  AgentKind kind(AgentId i) const { return kinds_[i]; }

  std::span<const double> beliefs() const noexcept { return beliefs_; }
  std::span<const double> working_beliefs() const noexcept { return working_; }
  std::span<const double> funds() const noexcept { return funds_; }

  std::span<double> beliefs() noexcept { return beliefs_; }
  std::span<double> working_beliefs() noexcept { return working_; }
  std::span<double> funds() noexcept { return funds_; }

  /// b*_i <- b_i for every agent.
  void begin_tick();

 private:
  std::size_t n_a_ = 0;
  std::vector<AgentKind> kinds_;
  std::vector<double> beliefs_;
  std::vector<double> working_;
  std::vector<double> funds_;
};

/// Moves `target` the fraction mu of the way towards `source`.
inline double apply_influence(double target, double source, double mu) {
  return target + mu * (source - target);
}

/// Every agent, in a uniformly random order, influences one uniformly chosen
/// neighbour's working belief. Updates are sequential. Isolated agents skip.
void persuasion_step(Population& pop, const Network& net, double mu, Rng& rng);

struct AdvertisementOutcome {
  std::size_t ads_sent = 0;
  std::vector<double> advertiser_beliefs;  // one per A agent, at send time
};

/// Each A agent, in index order, spends floor(funds) (capped at n-1) on
/// distinct targets chosen by the strategy and pulls them towards its own
/// working belief. With Strategy::none nothing is sent or debited.
AdvertisementOutcome advertisement_step(Population& pop, const Network& net,
                                        const ModelParams& params, Rng& rng);

/// Finalizes beliefs: each agent independently learns its true interest with
/// its type's probability, otherwise keeps its working belief.
void signal_step(Population& pop, double gamma_a, double gamma_b,
                 double interest_a, double interest_b, Rng& rng);

/// Condorcet winner under single-peaked preferences: the median belief.
/// Even counts take the midpoint of the two central values. Throws
/// std::invalid_argument on empty input.
double vote(std::span<const double> beliefs);

/// Per-A-agent profit law * pi_max.
inline double profit(double law, double pi_max) { return law * pi_max; }

void credit_funds(Population& pop, double profit_per_agent);

struct TickRecord {
  std::size_t tick = 0;  // 1-based
  double law = 0.0;
  double median_belief = 0.0;
  double belief_sd = 0.0;
  std::size_t ads_sent = 0;
  std::vector<double> advertiser_beliefs;
  double profit = 0.0;
  double funds_after = 0.0;  // summed over A agents, after credit
};

/// One period: reset working beliefs, persuasion, advertisement, signals,
/// vote, profit and funds credit.
TickRecord tick(Population& pop, const Network& net, const ModelParams& params,
                RngStreams& streams, std::size_t tick_index);

}  // namespace opinion
