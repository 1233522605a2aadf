#include "sgraph/canonical.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "sgraph/errors.hpp"
#include "sgraph/graph6.hpp"

namespace sgraph {

CanonicalDecomposition canonical_graph(const Graph& g) {
    const int n = g.vertex_count();
    CanonicalDecomposition d;
    d.vertex_map.assign(static_cast<std::size_t>(n), -1);

    // Identical neighborhood rows are exactly the twin classes (equal open
    // neighborhoods force non-adjacency). Classes keep first-seen order.
    std::vector<int> reps;
    for (int v = 0; v < n; ++v) {
        for (std::size_t c = 0; c < reps.size(); ++c)
            if (g.neighbors(v) == g.neighbors(reps[c])) {
                d.vertex_map[static_cast<std::size_t>(v)] = static_cast<int>(c);
                break;
            }
        if (d.vertex_map[static_cast<std::size_t>(v)] < 0) {
            d.vertex_map[static_cast<std::size_t>(v)] = static_cast<int>(reps.size());
            reps.push_back(v);
        }
    }

    const int q = static_cast<int>(reps.size());
    d.multiplicities.assign(static_cast<std::size_t>(q), 0);
    for (int v = 0; v < n; ++v) ++d.multiplicities[static_cast<std::size_t>(d.vertex_map[static_cast<std::size_t>(v)])];

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b)
            if (g.has_edge(reps[static_cast<std::size_t>(a)], reps[static_cast<std::size_t>(b)]))
                edges.emplace_back(a, b);
    d.quotient = Graph(q, edges);
    return d;
}

const P2Catalog& p2_catalog() {
    static const P2Catalog catalog = [] {
        P2Catalog c;
        c.graphs[0] = Graph(3, {{0, 1}, {0, 2}, {1, 2}});                          // G1 = K3
        c.graphs[1] = Graph(4, {{0, 1}, {1, 2}, {2, 3}});                          // G2 = P4
        c.graphs[2] = Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});                  // G3
        c.graphs[3] = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});                  // G4 = P5
        c.graphs[4] = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});          // G5 = C5
        c.graphs[5] = Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 4}});  // G6
        c.graphs[6] = Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});          // G7
        c.graphs[7] = Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {2, 4}, {4, 5}});  // G8
        c.graphs[8] = Graph(6, {{0, 1}, {1, 4}, {4, 2}, {2, 3}, {3, 5}, {5, 0},
                                {0, 4}, {2, 5}, {1, 3}});                          // G9 (prism)
        for (int i = 1; i <= 9; ++i) {
            const Graph& g = c.at(i);
            if (!is_connected(g))
                throw std::logic_error("catalog graph G" + std::to_string(i) + " not connected");
            if (!canonical_graph(g).is_identity())
                throw std::logic_error("catalog graph G" + std::to_string(i) + " has twins");
            if (summarize(g).inertia.negative != 2)
                throw std::logic_error("catalog graph G" + std::to_string(i) +
                                       " does not have exactly 2 negative eigenvalues");
        }
        return c;
    }();
    return catalog;
}

namespace {

// Arithmetic premises, 0-based vertex indices. Lemma numbering follows the
// two-negative-eigenvalue section: the canonical-degree lemma (all a_v >= 2,
// delta(H) >= 2), the bipartite/3-partite classes {1,2,4}, the B-lower-bound
// classes {5,6,9}, and the pendant classes {3,7,8}.
struct CaseInfo {
    std::vector<int> pendant_adjacent;  // vertices that must have a_v >= 2 (classes 3,7,8)
    double b_lower = 0.0;               // B lower bound used by the m-premise
};

CaseInfo case_info(int index1) {
    switch (index1) {
        case 3: return {{2}, 2.0};
        case 5: return {{}, 5.0};
        case 6: return {{}, 2.0};
        case 7: return {{0, 1}, 3.0};
        case 8: return {{4}, 2.0};
        case 9: return {{}, 7.0};
        default: return {{}, 0.0};
    }
}

}  // namespace

LemmaVerification verify_lemma_family(int catalog_index, const std::vector<int>& multiplicities,
                                      const Tolerances& tol) {
    if (catalog_index < 1 || catalog_index > 9)
        throw std::invalid_argument("catalog index must be 1..9");
    const Graph& base = p2_catalog().at(catalog_index);
    const Graph g = blow_up(base, multiplicities);
    const SpectralSummary s = summarize(g, tol);

    LemmaVerification v;
    v.catalog_index = catalog_index;
    v.multiplicities = multiplicities;
    v.n = s.n;
    v.m = s.m;
    v.s_minus = s.s_minus;
    v.slack = s.s_minus - (s.n - 1);
    v.b_actual = s.b_value;
    v.bound_holds = s.s_minus >= s.n - 1 - tol.slack;

    const CaseInfo info = case_info(catalog_index);
    const bool all_two = std::all_of(multiplicities.begin(), multiplicities.end(),
                                     [](int a) { return a >= 2; });
    switch (catalog_index) {
        case 1:
        case 2:
        case 4:
            // Complete 3-partite (G1) or bipartite (G2, G4) blow-ups.
            v.lemma = "classes {1,2,4}";
            v.applicable = true;
            v.premise_ok = v.m >= v.n - 1;
            break;
        case 5:
        case 6:
        case 9:
            // Covered unconditionally: all a_v >= 2 via the canonical-degree
            // lemma (m >= 2n), otherwise via m >= 2(n-1) - B.
            v.lemma = all_two ? "canonical-degree" : "B lower bound";
            v.applicable = true;
            v.premise_ok = all_two ? (v.m >= 2 * v.n)
                                   : (v.m >= 2.0 * (v.n - 1) - info.b_lower);
            break;
        case 3:
        case 7:
        case 8:
            // Pendant-adjacent vertices need multiplicity >= 2; then
            // m >= 2n if every a_v >= 2, else m >= 2(n-1) - B.
            v.lemma = "pendant classes {3,7,8}";
            v.applicable = std::all_of(info.pendant_adjacent.begin(), info.pendant_adjacent.end(),
                                       [&](int w) {
                                           return multiplicities[static_cast<std::size_t>(w)] >= 2;
                                       });
            v.premise_ok = all_two ? (v.m >= 2 * v.n)
                                   : (v.m >= 2.0 * (v.n - 1) - info.b_lower);
            break;
        default:
            break;
    }
    return v;
}

namespace {

void for_each_composition(int parts, int max_sum, std::vector<int>& a,
                          const std::function<void(const std::vector<int>&)>& fn) {
    const int depth = static_cast<int>(a.size());
    if (depth == parts) {
        fn(a);
        return;
    }
    const int remaining_parts = parts - depth - 1;
    int used = 0;
    for (int x : a) used += x;
    for (int value = 1; used + value + remaining_parts <= max_sum; ++value) {
        a.push_back(value);
        for_each_composition(parts, max_sum, a, fn);
        a.pop_back();
    }
}

}  // namespace

SweepReport theorem_maintwoeigs_sweep(int max_n, const Tolerances& tol) {
    SweepReport r;
    if (max_n < 3) throw std::invalid_argument("sweep needs max_n >= 3");
    if (max_n > 14) {
        r.partial = true;
        max_n = 14;
    }
    r.max_n = max_n;
    r.min_slack_checked = std::numeric_limits<double>::infinity();
    r.min_slack_recorded = std::numeric_limits<double>::infinity();

    for (int i = 1; i <= 9; ++i) {
        const Graph& base = p2_catalog().at(i);
        if (base.vertex_count() > max_n) continue;
        std::vector<int> a;
        for_each_composition(base.vertex_count(), max_n, a, [&](const std::vector<int>& mult) {
            const Graph g = blow_up(base, mult);
            const SpectralSummary s = summarize(g, tol);
            const double slack = s.s_minus - (s.n - 1);
            const int delta = *degree_stats(g).min_degree;
            if (delta >= 2) {
                ++r.checked;
                if (slack < r.min_slack_checked) {
                    r.min_slack_checked = slack;
                    r.argmin_graph6 = graph6_encode(g);
                }
                if (s.s_minus < s.n - 1 - tol.slack) ++r.violations;
            } else {
                ++r.recorded;
                r.min_slack_recorded = std::min(r.min_slack_recorded, slack);
            }
        });
    }
    return r;
}

}  // namespace sgraph
