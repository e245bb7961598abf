#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "opinion/network.hpp"
#include "opinion/rng.hpp"

namespace opinion {

// Advertisement target selection. All selectors return min(n_adv,
// |candidates|) distinct candidates in ascending agent order, so the result
// is independent of the order in which candidates are supplied (the random
// selector's draw still depends on it).

/// Uniform sample without replacement (partial Fisher-Yates).
std::vector<AgentId> select_random(std::span<const AgentId> candidates,
                                   std::size_t n_adv, Rng& rng);

/// The candidates whose belief is farthest from `interest_a`, ties broken by
/// ascending agent index. `beliefs` is indexed by agent id.
std::vector<AgentId> select_efficient(std::span<const AgentId> candidates,
                                      std::span<const double> beliefs,
                                      double interest_a, std::size_t n_adv);

/// The highest-degree candidates, ties broken by ascending agent index.
std::vector<AgentId> select_influencer(std::span<const AgentId> candidates,
                                       const Network& net, std::size_t n_adv);

}  // namespace opinion
