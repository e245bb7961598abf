#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "opinion/params.hpp"
#include "opinion/rng.hpp"

namespace opinion {

using AgentId = std::uint32_t;
using Edge = std::pair<AgentId, AgentId>;

/// Static undirected simple graph in compressed adjacency form. Neighbour
/// lists are sorted ascending.
class Network {
 public:
  Network() = default;

  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// out-of-range endpoints.
  Network(std::size_t n, std::span<const Edge> edges);

  std::size_t size() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const AgentId> neighbors(AgentId i) const {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::size_t degree(AgentId i) const { return offsets_[i + 1] - offsets_[i]; }
  bool has_edge(AgentId u, AgentId v) const;

  /// Each edge once as (u, v) with u < v, lexicographically ordered.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<AgentId> targets_;
};

/// Erdos-Renyi G(n, p): every unordered pair linked independently.
Network gen_random(std::size_t n, double p, Rng& rng);

/// Ring lattice with k neighbours per side, each lattice edge (u, u+j) then
/// rewired with probability beta to (u, w) for a uniform w that is neither u
/// nor already adjacent to u. Edge count stays n*k. Throws
/// std::invalid_argument if n <= 2k or k == 0.
Network gen_watts_strogatz(std::size_t n, std::size_t k, double beta, Rng& rng);

Network build_network(const NetworkSpec& spec, std::size_t n, Rng& rng);

/// True iff one component spans every node. The empty graph with n >= 2 is
/// disconnected; n <= 1 counts as connected.
bool is_connected(const Network& net);

/// One "u v" line per edge.
void write_edge_list(std::ostream& out, const Network& net);

}  // namespace opinion
