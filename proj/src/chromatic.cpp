#include "sgraph/chromatic.hpp"

#include <algorithm>
#include <numeric>

#include "sgraph/errors.hpp"
#include "sgraph/graph.hpp"

namespace sgraph {

namespace {

std::vector<int> degree_order(const Graph& g) {
    std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    return order;
}

// Greedy clique along the degree order: a quick chi lower bound.
int greedy_clique(const Graph& g, const std::vector<int>& order) {
    VertexSet clique;
    int size = 0;
    for (int v : order) {
        if ((g.neighbors(v) & clique) == clique) {
            clique.set(static_cast<std::size_t>(v));
            ++size;
        }
    }
    return size;
}

std::vector<int> greedy_coloring(const Graph& g, const std::vector<int>& order, int& colors_used) {
    std::vector<int> color(static_cast<std::size_t>(g.vertex_count()), -1);
    colors_used = 0;
    for (int v : order) {
        VertexSet forbidden;  // colors are < n <= kMaxVertices
        const VertexSet& nb = g.neighbors(v);
        for (int u = 0; u < g.vertex_count(); ++u)
            if (nb[static_cast<std::size_t>(u)] && color[static_cast<std::size_t>(u)] >= 0)
                forbidden.set(static_cast<std::size_t>(color[static_cast<std::size_t>(u)]));
        int c = 0;
        while (forbidden[static_cast<std::size_t>(c)]) ++c;
        color[static_cast<std::size_t>(v)] = c;
        colors_used = std::max(colors_used, c + 1);
    }
    return color;
}

struct KColoring {
    const Graph& g;
    const std::vector<int>& order;
    int k;
    long long& nodes;
    long long budget;
    std::vector<int> color;

    bool solve(std::size_t pos, int used) {
        if (++nodes > budget) throw resource_error("chromatic search exceeded node budget");
        if (pos == order.size()) return true;
        const int v = order[pos];
        const VertexSet& nb = g.neighbors(v);
        const int limit = std::min(used + 1, k);  // symmetry break: at most one fresh color
        for (int c = 0; c < limit; ++c) {
            bool clash = false;
            for (int u = 0; u < g.vertex_count() && !clash; ++u)
                if (nb[static_cast<std::size_t>(u)] && color[static_cast<std::size_t>(u)] == c)
                    clash = true;
            if (clash) continue;
            color[static_cast<std::size_t>(v)] = c;
            if (solve(pos + 1, std::max(used, c + 1))) return true;
            color[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    }
};

}  // namespace

ColoringResult chromatic_number(const Graph& g, long long node_budget) {
    const int n = g.vertex_count();
    if (node_budget <= 0) throw std::invalid_argument("chromatic_number: budget must be positive");
    if (n == 0) return {0, {}};
    if (g.edge_count() == 0) return {1, std::vector<int>(static_cast<std::size_t>(n), 0)};

    const std::vector<int> order = degree_order(g);
    const int lower = greedy_clique(g, order);
    int upper = 0;
    std::vector<int> witness = greedy_coloring(g, order, upper);

    long long nodes = 0;
    for (int k = lower; k < upper; ++k) {
        KColoring search{g, order, k, nodes, node_budget,
                         std::vector<int>(static_cast<std::size_t>(n), -1)};
        if (search.solve(0, 0)) {
            upper = k;
            witness = std::move(search.color);
            break;
        }
    }
    return {upper, std::move(witness)};
}

BoundEntry brooks_check(const Graph& g, int chi) {
    BoundEntry e;
    e.id = "brooks";
    const int n = g.vertex_count();
    const DegreeStats d = degree_stats(g);
    e.left = chi;
    e.right = d.max_degree.value_or(0);
    if (n == 0 || !is_connected(g)) {
        e.status = BoundStatus::inapplicable;
        e.note = "requires connected";
        return e;
    }
    if (g.edge_count() == n * (n - 1) / 2) {
        e.status = BoundStatus::inapplicable;
        e.note = "exception: complete graph";
        return e;
    }
    if (n % 2 == 1 && d.regular() && *d.max_degree == 2) {
        e.status = BoundStatus::inapplicable;
        e.note = "exception: odd cycle";
        return e;
    }
    e.status = chi <= *d.max_degree ? BoundStatus::satisfied : BoundStatus::violated;
    e.equality = chi == *d.max_degree;
    return e;
}

}  // namespace sgraph
