#include "sgraph/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sgraph/errors.hpp"

namespace sgraph {

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

Graph star(int n) {
    if (n < 2) throw std::invalid_argument("star: n must be >= 2");
    return complete_bipartite(1, n - 1);
}

Graph complete_bipartite(int a, int b) { return complete_q_partite({a, b}); }

Graph complete_q_partite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw std::invalid_argument("complete_q_partite: no parts");
    for (int p : part_sizes)
        if (p < 1) throw std::invalid_argument("complete_q_partite: part sizes must be >= 1");
    const int n = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);

    std::vector<int> part_of;
    part_of.reserve(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < part_sizes.size(); ++p)
        part_of.insert(part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));

    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
                e.emplace_back(i, j);
    return Graph(n, e);
}

Graph barbell(int k) {
    if (k < 3) throw std::invalid_argument("barbell: k must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            e.emplace_back(i, j);
            e.emplace_back(k + i, k + j);
        }
    e.emplace_back(k - 1, k);
    return Graph(2 * k, e);
}

BarbellPrediction barbell_predicted_spectrum(int k) {
    if (k < 3) throw std::invalid_argument("barbell_predicted_spectrum: k must be >= 3");
    BarbellPrediction p;
    p.k = k;
    const double kk = k;
    const double d1 = std::sqrt(kk * kk - 2.0 * kk + 5.0);
    const double d2 = std::sqrt(kk * kk + 2.0 * kk - 3.0);
    p.eigenvalues = {(kk - 1.0 - d1) / 2.0, (kk - 1.0 + d1) / 2.0,
                     (kk - 3.0 - d2) / 2.0, (kk - 3.0 + d2) / 2.0};
    p.eigenvalues.insert(p.eigenvalues.end(), static_cast<std::size_t>(2 * k - 4), -1.0);
    std::sort(p.eigenvalues.begin(), p.eigenvalues.end(), std::greater<>());
    return p;
}

int barbell_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 6 || n % 2 != 0) return 0;
    const int k = n / 2;
    // Degree profile: exactly two bridge endpoints of degree k, rest k-1.
    int u = -1, v = -1;
    for (int w = 0; w < n; ++w) {
        const int d = g.degree(w);
        if (d == k) {
            if (u < 0)
                u = w;
            else if (v < 0)
                v = w;
            else
                return 0;
        } else if (d != k - 1) {
            return 0;
        }
    }
    if (v < 0 || !g.has_edge(u, v)) return 0;
    // Each side is the bridge endpoint's closed neighborhood minus the other
    // endpoint; both must be disjoint k-cliques.
    auto side_of = [&](int root, int other) {
        VertexSet side = g.neighbors(root);
        side.reset(static_cast<std::size_t>(other));
        side.set(static_cast<std::size_t>(root));
        return side;
    };
    auto is_clique = [&](const VertexSet& side) {
        for (int a = 0; a < n; ++a) {
            if (!side[static_cast<std::size_t>(a)]) continue;
            for (int b = a + 1; b < n; ++b)
                if (side[static_cast<std::size_t>(b)] && !g.has_edge(a, b)) return false;
        }
        return true;
    };
    const VertexSet su = side_of(u, v), sv = side_of(v, u);
    if (static_cast<int>(su.count()) != k || static_cast<int>(sv.count()) != k) return 0;
    if ((su & sv).any()) return 0;
    if (!is_clique(su) || !is_clique(sv)) return 0;
    return k;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
    if (n1 + n2 > kMaxVertices)
        throw resource_error("disjoint union has " + std::to_string(n1 + n2) +
                             " vertices, cap is " + std::to_string(kMaxVertices));
    std::vector<std::pair<int, int>> e = g1.edges();
    for (const auto& [u, v] : g2.edges()) e.emplace_back(u + n1, v + n1);
    return Graph(n1 + n2, e);
}

Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) throw std::invalid_argument("circulant: n must be >= 1");
    for (int s : offsets)
        if (s < 1 || s > n / 2)
            throw std::invalid_argument("circulant: offset " + std::to_string(s) +
                                        " outside 1..n/2");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int s : offsets) {
            const int j = (i + s) % n;
            if (i < j)
                e.emplace_back(i, j);
            else if (j < i)
                e.emplace_back(j, i);
        }
    return Graph(n, e);
}

Graph line_graph(const Graph& g) {
    const std::vector<std::pair<int, int>> edges = g.edges();
    const int ln = static_cast<int>(edges.size());
    if (ln > kMaxVertices)
        throw resource_error("line graph has " + std::to_string(ln) + " vertices, cap is " +
                             std::to_string(kMaxVertices));
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < ln; ++a)
        for (int b = a + 1; b < ln; ++b) {
            const auto& [u1, v1] = edges[static_cast<std::size_t>(a)];
            const auto& [u2, v2] = edges[static_cast<std::size_t>(b)];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2) e.emplace_back(a, b);
        }
    return Graph(ln, e);
}

}  // namespace sgraph
