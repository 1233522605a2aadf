// families.hpp — constructors for the graph families the theorems cover,
// with closed-form spectral predictions where they exist.
//
// Labelings are fixed and documented per constructor so downstream checks
// are reproducible.
#pragma once

#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

Graph complete(int n);   // K_n, n >= 1
Graph cycle(int n);      // C_n, vertices 0..n-1 in cyclic order, n >= 3
Graph path(int n);       // P_n, vertices 0..n-1 along the path, n >= 1
Graph star(int n);       // K_{1,n-1}, center 0, n >= 2

// Parts occupy consecutive vertex ranges in argument order.
Graph complete_bipartite(int a, int b);
Graph complete_q_partite(const std::vector<int>& part_sizes);

// Two k-cliques {0..k-1} and {k..2k-1} joined by the bridge (k-1, k).
Graph barbell(int k);  // k >= 3

struct BarbellPrediction {
    int k = 0;
    std::vector<double> eigenvalues;  // descending, length 2k: four explicit
                                      // roots plus -1 with multiplicity 2k-4
};

BarbellPrediction barbell_predicted_spectrum(int k);

// Structural detection: two k-cliques plus one bridge. Returns k, or 0.
int barbell_clique_size(const Graph& g);

// g1's vertices keep their labels; g2's are shifted by g1's count.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// i ~ j iff the cyclic distance |i-j| mod n lies in offsets;
// offsets must be within 1..n/2.
Graph circulant(int n, const std::vector<int>& offsets);

// Vertices are the edges of g in lexicographic (u < v) order; two are
// adjacent iff the edges share an endpoint.
Graph line_graph(const Graph& g);

}  // namespace sgraph
