#include "fracmatch/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fracmatch {

std::vector<Rat> dyadic_values(int d) {
  if (d < 0 || d > 20) throw std::invalid_argument("dyadic_values: d out of range [0, 20]");
  Int den = Int(1) << d;
  std::vector<Rat> values;
  values.reserve((1 << d) + 1);
  for (long long i = 0; i <= (1LL << d); ++i) values.emplace_back(Int(i), den);
  return values;
}

std::vector<EdgeAssignment> exhaustive_mfm_search(const PortGraph& g,
                                                  const std::vector<Rat>& values) {
  const int m = g.edge_count();
  const int n = g.node_count();

  std::uint64_t space = 1;
  for (int i = 0; i < m; ++i) {
    space *= values.size();
    if (space > 10'000'000ULL || (values.empty() && m > 0)) {
      if (values.empty()) return {};
      throw std::length_error("exhaustive_mfm_search: |values|^|edges| exceeds 10^7");
    }
  }

  std::vector<EdgeAssignment> solutions;
  std::vector<std::size_t> idx(m, 0);
  EdgeAssignment x(m);
  for (int e = 0; e < m; ++e) x[e] = values[0];

  while (true) {
    // Loads recomputed from each node's port table (a loop is met at both of
    // its ports and therefore counts twice) — not via the verifier.
    bool feasible = true;
    std::vector<Rat> load(n);
    for (int vi = 0; vi < n && feasible; ++vi) {
      NodeId v = g.node_at(vi);
      int deg = g.degree(v);
      for (int p = 1; p <= deg; ++p) load[vi] = load[vi] + x[g.port(v, p)->edge];
      if (Rat(1) < load[vi]) feasible = false;
    }
    bool maximal = feasible;
    for (int e = 0; e < m && maximal; ++e) {
      const Edge& ed = g.edges()[e];
      if (load[g.index_of(ed.u)] != Rat(1) && load[g.index_of(ed.v)] != Rat(1)) maximal = false;
    }
    if (feasible && maximal) solutions.push_back(x);

    // Odometer: the last edge cycles fastest.
    int e = m - 1;
    while (e >= 0) {
      if (++idx[e] < values.size()) {
        x[e] = values[idx[e]];
        break;
      }
      idx[e] = 0;
      x[e] = values[0];
      --e;
    }
    if (e < 0) break;
  }
  return solutions;
}

namespace {

// The searches run on integer multiples of 1/lcm(1..Q), which keeps every
// sum and equality test exact in int64 (Q <= 40 bounds the lcm well below
// overflow even after summing five terms).

struct Obs32Grid {
  long long L = 1;                     // common denominator
  std::vector<long long> mult;         // grid values as multiples of 1/L, ascending
  std::vector<Rat> value;              // same values as rationals
  std::vector<int> cls;                // class_index of each value
  std::unordered_map<long long, int> index_of;
};

Obs32Grid make_grid(int max_denom) {
  if (max_denom < 1 || max_denom > 40)
    throw std::invalid_argument("obs32_witness_search: max_denom out of range [1, 40]");
  Obs32Grid grid;
  for (int q = 1; q <= max_denom; ++q) grid.L = std::lcm(grid.L, (long long)q);
  std::vector<std::pair<long long, Rat>> vals;
  for (int q = 1; q <= max_denom; ++q)
    for (int p = 0; p <= q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      vals.push_back({grid.L / q * p, Rat(p, q)});
    }
  std::sort(vals.begin(), vals.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [m, v] : vals) {
    grid.index_of[m] = static_cast<int>(grid.mult.size());
    grid.mult.push_back(m);
    grid.value.push_back(v);
    grid.cls.push_back(class_index(v));
  }
  return grid;
}

void check_obs32_args(int n, const Rat& target, int r, int rp) {
  if (n < 1) throw std::invalid_argument("obs32_witness_search: n must be >= 1");
  if (class_index(target) != n)
    throw std::invalid_argument("obs32_witness_search: target " + target.str() +
                                " is not in R_" + std::to_string(n));
  if (r < 0 || rp < 0) throw std::invalid_argument("obs32_witness_search: r, r' must be >= 0");
}

// target as a multiple of 1/L, or nullopt when its denominator does not
// divide L (then no grid tuple can solve the equation at all).
std::optional<long long> target_multiple(const Obs32Grid& grid, const Rat& target) {
  Int den = target.den();
  if (den > grid.L || Int(grid.L) % den != 0) return std::nullopt;
  Int m = Int(grid.L) / den * target.num();
  return static_cast<long long>(m);
}

}  // namespace

Obs32Report obs32_witness_search(int n, const Rat& target, int r, int rp, int max_denom) {
  check_obs32_args(n, target, r, rp);
  Obs32Grid grid = make_grid(max_denom);
  Obs32Report report;
  report.grid_size = static_cast<int>(grid.mult.size());

  auto tm = target_multiple(grid, target);
  if (!tm) return report;  // equation unsolvable over this grid
  const long long S = grid.L - *tm;  // required value of 2*sum(l) + sum(x)
  if (S < 0) return report;

  const int G = report.grid_size;
  // Non-witness values only: any solution found is then a counterexample.
  std::vector<char> ell_ok(G), x_ok(G);
  for (int i = 0; i < G; ++i) {
    ell_ok[i] = grid.cls[i] <= n;
    x_ok[i] = grid.cls[i] < n;
  }

  std::vector<int> ell_idx(r), x_idx(rp);
  const int total = r + rp;

  // Slots are filled in order: l_1 <= ... <= l_r, then x_1 <= ... <= x_{r'}.
  // The final slot is forced by the equation instead of enumerated.
  auto record = [&](void) {
    report.holds = false;
    std::vector<Rat> ells, xs;
    for (int i : ell_idx) ells.push_back(grid.value[i]);
    for (int i : x_idx) xs.push_back(grid.value[i]);
    report.counterexample_ells = std::move(ells);
    report.counterexample_xs = std::move(xs);
  };

  auto try_forced = [&](long long partial, int min_idx, bool is_x) {
    ++report.tuples_examined;
    long long rem = S - partial;
    if (rem < 0) return;
    if (!is_x) {
      if (rem % 2 != 0) return;
      rem /= 2;
    }
    auto it = grid.index_of.find(rem);
    if (it == grid.index_of.end()) return;
    int i = it->second;
    if (i < min_idx) return;  // would break the sorted order
    if (is_x ? !x_ok[i] : !ell_ok[i]) return;
    (is_x ? x_idx[rp - 1] : ell_idx[r - 1]) = i;
    record();
  };

  auto search = [&](auto&& self, int slot, int start, long long partial) -> void {
    if (!report.holds) return;
    if (slot == total - 1) {
      try_forced(partial, slot < r ? start : (slot == r ? 0 : start), slot >= r);
      return;
    }
    const bool is_x = slot >= r;
    const int from = is_x && slot == r ? 0 : start;
    for (int i = from; i < G; ++i) {
      if (is_x ? !x_ok[i] : !ell_ok[i]) continue;
      long long add = is_x ? grid.mult[i] : 2 * grid.mult[i];
      if (partial + add > S) break;  // ascending grid: no later value fits
      (is_x ? x_idx[slot - r] : ell_idx[slot]) = i;
      self(self, slot + 1, i, partial + add);
      if (!report.holds) return;
    }
  };

  if (total == 0) {
    report.tuples_examined = 1;
    if (S == 0) report.holds = false;  // cannot happen for n >= 1 (target != 1)
    return report;
  }
  search(search, 0, 0, 0);
  return report;
}

Obs32Report obs32_witness_search_naive(int n, const Rat& target, int r, int rp, int max_denom) {
  check_obs32_args(n, target, r, rp);
  Obs32Grid grid = make_grid(max_denom);
  Obs32Report report;
  report.grid_size = static_cast<int>(grid.mult.size());

  const int total = r + rp;
  std::uint64_t space = 1;
  for (int i = 0; i < total; ++i) {
    space *= grid.mult.size();
    if (space > 10'000'000ULL)
      throw std::length_error("obs32_witness_search_naive: grid^(r+r') exceeds 10^7");
  }

  auto tm = target_multiple(grid, target);
  if (!tm) return report;
  const long long S = grid.L - *tm;

  std::vector<int> idx(total, 0);
  while (true) {
    ++report.tuples_examined;
    long long sum = 0;
    for (int s = 0; s < total; ++s) sum += s < r ? 2 * grid.mult[idx[s]] : grid.mult[idx[s]];
    if (sum == S) {
      bool witness = false;
      for (int s = 0; s < total && !witness; ++s) {
        int c = grid.cls[idx[s]];
        witness = s < r ? c > n : c >= n;
      }
      if (!witness && total > 0) {
        report.holds = false;
        std::vector<Rat> ells, xs;
        for (int s = 0; s < r; ++s) ells.push_back(grid.value[idx[s]]);
        for (int s = r; s < total; ++s) xs.push_back(grid.value[idx[s]]);
        report.counterexample_ells = std::move(ells);
        report.counterexample_xs = std::move(xs);
        return report;
      }
      if (total == 0) {
        report.holds = false;
        return report;
      }
    }
    int s = total - 1;
    while (s >= 0 && ++idx[s] == static_cast<int>(grid.mult.size())) idx[s--] = 0;
    if (s < 0) break;
  }
  return report;
}

}  // namespace fracmatch
