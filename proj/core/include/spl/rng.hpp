#pragma once

#include <cstdint>

#include "spl/graph.hpp"

namespace spl {

// SplitMix64: the project-wide RNG. Fixed algorithm so every seeded suite
// replays identically on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [lo, hi] inclusive.
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // True with probability num/den, decided by exact integer threshold.
  bool chance(std::uint64_t num, std::uint64_t den) {
    return static_cast<unsigned __int128>(next()) * den <
           (static_cast<unsigned __int128>(num) << 64);
  }

 private:
  std::uint64_t s_;
};

// Per-trial stream derivation, so trial results do not depend on order.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 r(seed ^ (stream * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull));
  return r.next();
}

// G(n, p) with p = num/den, edges decided pair by pair in (u, v) order.
Graph random_graph(int n, std::uint64_t p_num, std::uint64_t p_den,
                   SplitMix64& rng);

}  // namespace spl
