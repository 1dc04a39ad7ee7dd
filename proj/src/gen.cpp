#include "fracmatch/gen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fracmatch {

PortGraph ports_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                           std::mt19937_64& rng) {
  std::vector<std::vector<std::pair<std::size_t, bool>>> slots(n);  // (edge idx, is_u)
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    slots[pairs[i].first].emplace_back(i, true);
    slots[pairs[i].second].emplace_back(i, false);
  }
  std::vector<Edge> edges(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    edges[i].u = pairs[i].first;
    edges[i].v = pairs[i].second;
    edges[i].dir = rng_below(rng, 2) ? Dir::uv : Dir::vu;
  }
  for (int v = 0; v < n; ++v) {
    std::vector<int> ports(slots[v].size());
    std::iota(ports.begin(), ports.end(), 1);
    rng_shuffle(rng, ports);
    for (std::size_t k = 0; k < slots[v].size(); ++k) {
      auto [ei, is_u] = slots[v][k];
      (is_u ? edges[ei].pu : edges[ei].pv) = ports[k];
    }
  }
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 0);
  return PortGraph(std::move(nodes), std::move(edges));
}

PortGraph gen_path(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gen_path: need n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return ports_from_pairs(n, pairs, rng);
}

PortGraph gen_cycle(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("gen_cycle: need n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return ports_from_pairs(n, pairs, rng);
}

PortGraph gen_random(int n, int delta, std::uint64_t seed, std::optional<int> m_target) {
  if (n < 1 || delta < 0) throw std::invalid_argument("gen_random: bad parameters");
  std::mt19937_64 rng(seed);
  std::vector<int> deg(n, 0);
  std::set<std::pair<int, int>> used;
  std::vector<std::pair<int, int>> pairs;
  int want = m_target.value_or(n * delta);  // effectively "fill to the degree cap"
  long long attempts = 30LL * n * std::max(1, delta);
  while (static_cast<int>(pairs.size()) < want && attempts-- > 0) {
    int u = static_cast<int>(rng_below(rng, n));
    int v = static_cast<int>(rng_below(rng, n));
    if (u == v || deg[u] >= delta || deg[v] >= delta) continue;
    auto key = std::minmax(u, v);
    if (!used.insert({key.first, key.second}).second) continue;
    pairs.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return ports_from_pairs(n, pairs, rng);
}

}  // namespace fracmatch
