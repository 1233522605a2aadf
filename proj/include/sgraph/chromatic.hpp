// chromatic.hpp — exact chromatic number by branch and bound, for the
// chi-dependent inequalities. Intended for small graphs (n <= ~16).
#pragma once

#include <vector>

#include "sgraph/bound_entry.hpp"
#include "sgraph/graph.hpp"

namespace sgraph {

struct ColoringResult {
    int chi = 0;
    std::vector<int> witness;  // vertex -> color in 0..chi-1, proper
};

// Branch and bound over vertices in descending-degree order (ties by index),
// greedy-clique lower bound, greedy-coloring upper bound. Deterministic.
// Throws resource_error once the search exceeds node_budget nodes.
ColoringResult chromatic_number(const Graph& g, long long node_budget = 50'000'000);

// chi <= max degree for connected graphs that are neither complete nor an
// odd cycle; the two exceptional families are classified structurally and
// reported inapplicable. Disconnected input is inapplicable.
BoundEntry brooks_check(const Graph& g, int chi);

}  // namespace sgraph
