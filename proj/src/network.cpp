#include "opinion/network.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace opinion {

Network::Network(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at " + std::to_string(u));
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + deg[i];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[cursor[u]++] = v;
    targets_[cursor[v]++] = u;
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw std::invalid_argument("duplicate edge at node " + std::to_string(i));
    }
  }
}

bool Network::has_edge(AgentId u, AgentId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Network::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (AgentId u = 0; u < size(); ++u) {
    for (AgentId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Network gen_random(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (AgentId u = 0; u < n; ++u) {
    for (AgentId v = u + 1; v < n; ++v) {
      if (bernoulli(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Network(n, edges);
}

Network gen_watts_strogatz(std::size_t n, std::size_t k, double beta, Rng& rng) {
  if (k == 0) throw std::invalid_argument("watts_strogatz: k must be >= 1");
  if (n <= 2 * k) {
    throw std::invalid_argument("watts_strogatz: n = " + std::to_string(n) +
                                " must exceed 2k = " + std::to_string(2 * k));
  }

  // Mutable adjacency during rewiring; degrees stay small so linear scans win.
  std::vector<std::vector<AgentId>> adj(n);
  auto linked = [&](AgentId a, AgentId b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  auto unlink = [&](AgentId a, AgentId b) {
    adj[a].erase(std::find(adj[a].begin(), adj[a].end(), b));
    adj[b].erase(std::find(adj[b].begin(), adj[b].end(), a));
  };
  for (AgentId u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k; ++j) {
      const auto v = static_cast<AgentId>((u + j) % n);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }

  for (std::size_t j = 1; j <= k; ++j) {
    for (AgentId u = 0; u < n; ++u) {
      const auto v = static_cast<AgentId>((u + j) % n);
      if (!bernoulli(rng, beta)) continue;
      if (adj[u].size() >= n - 1) continue;  // no valid target
      AgentId w;
      do {
        w = static_cast<AgentId>(uniform_index(rng, n));
      } while (w == u || linked(u, w));
      unlink(u, v);
      adj[u].push_back(w);
      adj[w].push_back(u);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(n * k);
  for (AgentId u = 0; u < n; ++u) {
    for (AgentId v : adj[u]) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return Network(n, edges);
}

Network build_network(const NetworkSpec& spec, std::size_t n, Rng& rng) {
  switch (spec.kind) {
    case NetworkKind::random: return gen_random(n, spec.p, rng);
    case NetworkKind::watts_strogatz:
      return gen_watts_strogatz(n, spec.k, spec.beta, rng);
  }
  throw std::logic_error("unknown network kind");
}

bool is_connected(const Network& net) {
  const std::size_t n = net.size();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<AgentId> frontier{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const AgentId u = frontier.back();
    frontier.pop_back();
    for (AgentId v : net.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push_back(v);
      }
    }
  }
  return reached == n;
}

void write_edge_list(std::ostream& out, const Network& net) {
  for (const auto& [u, v] : net.edges()) out << u << ' ' << v << '\n';
}

}  // namespace opinion
