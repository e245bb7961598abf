#include "opinion/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "opinion/stats.hpp"
#include "opinion/targeting.hpp"

namespace opinion {

char to_char(AgentKind k) { return k == AgentKind::A ? 'A' : 'B'; }

Population::Population(std::size_t n_a, std::size_t n_b,
                       std::vector<double> initial_beliefs)
    : n_a_(n_a),
      kinds_(n_a + n_b, AgentKind::B),
      beliefs_(std::move(initial_beliefs)),
      working_(beliefs_),
      funds_(n_a + n_b, 0.0) {
  if (beliefs_.size() != kinds_.size()) {
    throw std::invalid_argument("initial belief count does not match population");
  }
  std::fill_n(kinds_.begin(), n_a, AgentKind::A);
}

void Population::begin_tick() { std::copy(beliefs_.begin(), beliefs_.end(), working_.begin()); }

void persuasion_step(Population& pop, const Network& net, double mu, Rng& rng) {
  const std::size_t n = pop.size();
  std::vector<AgentId> order(n);
  std::iota(order.begin(), order.end(), AgentId{0});
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(order[i - 1], order[j]);
  }

  auto working = pop.working_beliefs();
  for (AgentId speaker : order) {
    const auto nb = net.neighbors(speaker);
    if (nb.empty()) continue;
    const AgentId listener = nb[uniform_index(rng, nb.size())];
    working[listener] = apply_influence(working[listener], working[speaker], mu);
  }
}

AdvertisementOutcome advertisement_step(Population& pop, const Network& net,
                                        const ModelParams& params, Rng& rng) {
  AdvertisementOutcome out;
  out.advertiser_beliefs.reserve(pop.n_a());
  auto working = pop.working_beliefs();
  auto funds = pop.funds();
  const std::size_t n = pop.size();

  std::vector<AgentId> candidates;
  for (AgentId a = 0; a < pop.n_a(); ++a) {
    const double belief = working[a];
    out.advertiser_beliefs.push_back(belief);
    if (params.strategy == Strategy::none) continue;

    const double affordable = std::floor(funds[a]);
    const std::size_t n_adv =
        affordable >= static_cast<double>(n - 1) ? n - 1 : static_cast<std::size_t>(affordable);
    if (n_adv == 0) continue;

    candidates.clear();
    for (AgentId j = 0; j < n; ++j) {
      if (j != a) candidates.push_back(j);
    }
    std::vector<AgentId> targets;
    switch (params.strategy) {
      case Strategy::random: targets = select_random(candidates, n_adv, rng); break;
      case Strategy::efficient:
        targets = select_efficient(candidates, working, params.interest_a, n_adv);
        break;
      case Strategy::influencer: targets = select_influencer(candidates, net, n_adv); break;
      case Strategy::none: break;
    }
    for (AgentId t : targets) working[t] = apply_influence(working[t], belief, params.mu);
    funds[a] -= static_cast<double>(n_adv);
    out.ads_sent += n_adv;
  }
  return out;
}

void signal_step(Population& pop, double gamma_a, double gamma_b, double interest_a,
                 double interest_b, Rng& rng) {
  auto beliefs = pop.beliefs();
  auto working = pop.working_beliefs();
  for (AgentId i = 0; i < pop.size(); ++i) {
    const bool is_a = pop.kind(i) == AgentKind::A;
    if (bernoulli(rng, is_a ? gamma_a : gamma_b)) {
      beliefs[i] = is_a ? interest_a : interest_b;
    } else {
      beliefs[i] = working[i];
    }
  }
}

double vote(std::span<const double> beliefs) { return median(beliefs); }

void credit_funds(Population& pop, double profit_per_agent) {
  auto funds = pop.funds();
  for (std::size_t a = 0; a < pop.n_a(); ++a) funds[a] += profit_per_agent;
}

TickRecord tick(Population& pop, const Network& net, const ModelParams& params,
                RngStreams& streams, std::size_t tick_index) {
  TickRecord rec;
  rec.tick = tick_index;

  pop.begin_tick();
  persuasion_step(pop, net, params.mu, streams.persuasion);
  auto ads = advertisement_step(pop, net, params, streams.advertisement);
  signal_step(pop, params.gamma_a, params.gamma_b, params.interest_a, params.interest_b,
              streams.signals);

  rec.median_belief = vote(pop.beliefs());
  rec.law = rec.median_belief;
  rec.belief_sd = std_dev(pop.beliefs());
  rec.ads_sent = ads.ads_sent;
  rec.advertiser_beliefs = std::move(ads.advertiser_beliefs);

  rec.profit = profit(rec.law, params.pi_max);
  credit_funds(pop, rec.profit);
  const auto funds = pop.funds();
  rec.funds_after = std::accumulate(funds.begin(), funds.begin() + static_cast<std::ptrdiff_t>(pop.n_a()), 0.0);
  return rec;
}

}  // namespace opinion
