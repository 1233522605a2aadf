// exact_rank.hpp — exact rank of a 0/1 adjacency matrix over the integers,
// via fraction-free (Bareiss) Gaussian elimination with full pivoting.
#pragma once

#include "sgraph/graph.hpp"

namespace sgraph {

// Bareiss entries are minors of the input, bounded for 0/1 matrices by
// (n+1)^((n+1)/2) / 2^n; the update forms products of two such minors, which
// stay inside a signed 128-bit integer for n <= 37. Larger matrices switch
// to arbitrary precision (GMP).
inline constexpr int kInt128RankLimit = 36;

int exact_rank(const Graph& g);

}  // namespace sgraph
