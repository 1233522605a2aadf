// canonical.hpp — twin-quotient (canonical graph) machinery: the quotient
// computation, the nine canonical graphs with exactly two negative
// eigenvalues, and the verification sweep for the degree >= 2 theorem.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/spectral.hpp"

namespace sgraph {

// Twins are non-adjacent vertices with identical neighborhoods; classes of
// the twin relation collapse to single quotient vertices. The quotient is
// itself twin-free, so the operation is idempotent.
struct CanonicalDecomposition {
    Graph quotient;
    std::vector<int> multiplicities;  // quotient vertex -> twin-class size
    std::vector<int> vertex_map;      // original vertex -> quotient vertex

    bool is_identity() const {
        for (int a : multiplicities)
            if (a != 1) return false;
        return true;
    }
};

CanonicalDecomposition canonical_graph(const Graph& g);

// The nine canonical graphs with exactly two negative eigenvalues, with
// fixed labelings matching the edge-count expansions used by the lemma
// verifications:
//   G1 = K3, G2 = P4, G4 = P5, G5 = C5 (vertices in cyclic order),
//   G3 = triangle {0,1,2} + pendant 3 on 2,
//   G6 = 4-cycle 0-1-2-3 + vertex 4 adjacent to 1 and 2,
//   G7 = triangle {0,1,2} + pendant 3 on 0 + pendant 4 on 1,
//   G8 = G6 + pendant 5 on 4,
//   G9 = triangular prism: triangles {0,1,4} and {2,3,5}, matching
//        0-5, 1-3, 4-2 (so it contains the 6-cycle 0-1-4-2-3-5).
// Construction self-check: each graph connected, twin-free, nu = 2.
struct P2Catalog {
    std::array<Graph, 9> graphs;

    const Graph& at(int index1) const { return graphs[static_cast<std::size_t>(index1 - 1)]; }
};

const P2Catalog& p2_catalog();

// Which lemma covers a blow-up of catalog graph i with the given
// multiplicities, and whether its hypotheses and arithmetic premise hold.
struct LemmaVerification {
    int catalog_index = 0;  // 1..9
    std::vector<int> multiplicities;
    int n = 0;
    int m = 0;
    std::string lemma;        // which lemma's hypotheses were examined
    bool applicable = false;  // hypotheses hold for this multiplicity vector
    bool premise_ok = false;  // the lemma's arithmetic premise on m
    double s_minus = 0.0;
    double slack = 0.0;    // s- - (n - 1)
    double b_actual = 0.0; // true B of the blow-up (the lemmas only need lower bounds)
    bool bound_holds = false;  // s- >= n - 1 - tol
};

LemmaVerification verify_lemma_family(int catalog_index, const std::vector<int>& multiplicities,
                                      const Tolerances& tol = {});

// Exhaustive blow-ups of the catalog with sum(a) <= max_n. Blow-ups with
// minimum degree >= 2 are asserted against s- >= n-1; the rest are recorded
// only. max_n above 14 is clamped and the report flagged partial.
struct SweepReport {
    int max_n = 0;
    bool partial = false;
    long long checked = 0;    // delta >= 2, asserted
    long long recorded = 0;   // delta <= 1, not asserted
    long long violations = 0; // checked graphs with s- < n - 1 - tol
    double min_slack_checked = 0.0;
    double min_slack_recorded = 0.0;
    std::string argmin_graph6;
};

SweepReport theorem_maintwoeigs_sweep(int max_n, const Tolerances& tol = {});

}  // namespace sgraph
