#pragma once

// Deterministic instance generators. Same parameters and seed always produce
// byte-identical graphs, independent of platform or standard library.

#include "fracmatch/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace fracmatch {

// Bounded draw that does not depend on std::uniform_int_distribution
// (whose output is implementation-defined).
inline std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

template <class T>
void rng_shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng_below(rng, i)]);
}

// Path on nodes 0..n-1 (n >= 1) with seeded random ports and orientations.
PortGraph gen_path(int n, std::uint64_t seed);

// Cycle on nodes 0..n-1 (n >= 3), seeded random ports and orientations.
PortGraph gen_cycle(int n, std::uint64_t seed);

// Loop-free simple graph with max degree <= delta. Edges are sampled
// uniformly until m_target edges are placed (default: as many as fit) or the
// attempt budget runs out; ports and orientations are uniform.
PortGraph gen_random(int n, int delta, std::uint64_t seed,
                     std::optional<int> m_target = std::nullopt);

// Assign seeded random ports and orientations to an undirected simple edge
// list on nodes 0..n-1.
PortGraph ports_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                           std::mt19937_64& rng);

}  // namespace fracmatch
