#include "opinion/targeting.hpp"

#include <algorithm>
#include <cmath>

namespace opinion {

namespace {

template <class Better>
std::vector<AgentId> top_k(std::span<const AgentId> candidates, std::size_t n_adv,
                           Better better) {
  std::vector<AgentId> pool(candidates.begin(), candidates.end());
  const std::size_t k = std::min(n_adv, pool.size());
  if (k < pool.size()) {
    std::nth_element(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k),
                     pool.end(), better);
    pool.resize(k);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

std::vector<AgentId> select_random(std::span<const AgentId> candidates,
                                   std::size_t n_adv, Rng& rng) {
  std::vector<AgentId> pool(candidates.begin(), candidates.end());
  const std::size_t k = std::min(n_adv, pool.size());
  if (k < pool.size()) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto j = i + static_cast<std::size_t>(uniform_index(rng, pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

std::vector<AgentId> select_efficient(std::span<const AgentId> candidates,
                                      std::span<const double> beliefs,
                                      double interest_a, std::size_t n_adv) {
  return top_k(candidates, n_adv, [&](AgentId x, AgentId y) {
    const double dx = std::abs(beliefs[x] - interest_a);
    const double dy = std::abs(beliefs[y] - interest_a);
    if (dx != dy) return dx > dy;
    return x < y;
  });
}

std::vector<AgentId> select_influencer(std::span<const AgentId> candidates,
                                       const Network& net, std::size_t n_adv) {
  return top_k(candidates, n_adv, [&](AgentId x, AgentId y) {
    const std::size_t dx = net.degree(x);
    const std::size_t dy = net.degree(y);
    if (dx != dy) return dx > dy;
    return x < y;
  });
}

}  // namespace opinion
