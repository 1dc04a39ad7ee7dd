#pragma once

// Brute-force oracles for small instances. These deliberately share no load
// arithmetic with verify(): the searches below recompute node loads from the
// port tables, so agreement between an algorithm, verify() and an oracle is
// a three-way cross-check rather than one code path agreeing with itself.

#include "fracmatch/graph.hpp"
#include "fracmatch/graph_io.hpp"
#include "fracmatch/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace fracmatch {

// {0, 1/2^d, 2/2^d, ..., 1} in increasing order.
std::vector<Rat> dyadic_values(int d);

// Every assignment of the given values to the edges of g that is a maximal
// fractional matching (all loads <= 1, every edge has a fully loaded
// endpoint), in odometer order: edge 0 cycles slowest, values in the order
// given. Throws std::length_error when |values|^|edges| > 10^7.
std::vector<EdgeAssignment> exhaustive_mfm_search(const PortGraph& g,
                                                  const std::vector<Rat>& values);

// Exhaustive check of the parity argument behind the class-growth step: if
//
//   2*l_1 + ... + 2*l_r + x_1 + ... + x_{r'} + target = 1
//
// with target of class exactly n >= 1, then some l_i has class > n or some
// x_i has class >= n. The search enumerates solutions over the grid of
// rationals p/q in [0,1] with q <= Q, restricted to non-witness values only,
// so every solution it finds is a counterexample. holds == true means none
// exist.
struct Obs32Report {
  bool holds = true;
  // Set iff !holds: the offending values.
  std::optional<std::vector<Rat>> counterexample_ells;
  std::optional<std::vector<Rat>> counterexample_xs;
  std::uint64_t tuples_examined = 0;
  int grid_size = 0;
};

Obs32Report obs32_witness_search(int n, const Rat& target, int r, int rp, int max_denom = 24);

// Reference implementation: full enumeration over the same grid with no
// pruning, no sorting and no non-witness restriction, counting assignments
// that solve the equation without containing a witness. Exists purely to
// cross-check the pruned search at small Q.
Obs32Report obs32_witness_search_naive(int n, const Rat& target, int r, int rp,
                                       int max_denom = 8);

}  // namespace fracmatch
