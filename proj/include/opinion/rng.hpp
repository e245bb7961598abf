#pragma once

#include <cstdint>
#include <random>

namespace opinion {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used for all seed derivation so that derived seeds
/// are stable across platforms and standard library versions.
std::uint64_t mix64(std::uint64_t x);

/// Seed for replicate `replicate` of cell `cell` under `base_seed`:
/// mix64(mix64(mix64(base_seed) ^ cell) ^ replicate).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t cell,
                          std::uint64_t replicate);

/// Uniform integer in [0, bound). bound must be > 0. Lemire's nearly
/// divisionless method; independent of the standard library's distributions.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// True with probability p (p <= 0 never, p >= 1 always, no draw consumed
/// at the extremes).
bool bernoulli(Rng& rng, double p);

enum class Stream : std::uint64_t {
  network = 1,
  init_beliefs = 2,
  persuasion = 3,
  advertisement = 4,
  signals = 5,
};

/// Independent substreams of one master seed, one per model mechanism.
struct RngStreams {
  explicit RngStreams(std::uint64_t master_seed);

  Rng network;
  Rng init_beliefs;
  Rng persuasion;
  Rng advertisement;
  Rng signals;
};

}  // namespace opinion
