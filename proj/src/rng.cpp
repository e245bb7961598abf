#include "opinion/rng.hpp"

namespace opinion {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t cell,
                          std::uint64_t replicate) {
  return mix64(mix64(mix64(base_seed) ^ cell) ^ replicate);
}

std::uint64_t uniform_index(Rng& rng, std::uint64_t bound) {
  std::uint64_t x = rng();
  uint128 m = static_cast<uint128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = rng();
      m = static_cast<uint128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool bernoulli(Rng& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return uniform_unit(rng) < p;
}

namespace {

Rng make_stream(std::uint64_t master_seed, Stream s) {
  return Rng(mix64(mix64(master_seed) ^ static_cast<std::uint64_t>(s)));
}

}  // namespace

RngStreams::RngStreams(std::uint64_t master_seed)
    : network(make_stream(master_seed, Stream::network)),
      init_beliefs(make_stream(master_seed, Stream::init_beliefs)),
      persuasion(make_stream(master_seed, Stream::persuasion)),
      advertisement(make_stream(master_seed, Stream::advertisement)),
      signals(make_stream(master_seed, Stream::signals)) {}

}  // namespace opinion
