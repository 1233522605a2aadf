// canonical_form.hpp — canonical labeling by color refinement plus
// backtracking minimization of the adjacency bit string, pruned with
// automorphisms discovered along the way. Equal forms iff isomorphic.
#pragma once

#include <string>
#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

// Canonical labeling as position -> original vertex.
std::vector<int> canonical_labeling(const Graph& g);

Graph canonical_relabel(const Graph& g);

// graph6 encoding of the canonically relabeled graph; usable as a
// deduplication key (equal byte strings iff isomorphic).
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sgraph
