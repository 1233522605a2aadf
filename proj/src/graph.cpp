#include "sgraph/graph.hpp"

#include <stdexcept>
#include <string>

#include "sgraph/errors.hpp"

namespace sgraph {

Graph::Graph(int n) : n_(n), m_(0), rows_(static_cast<std::size_t>(n)) {
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
}

void Graph::add_edge_unchecked(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                    ", " + std::to_string(v) + ")");
    if (u == v)
        throw std::invalid_argument("loops are not allowed: vertex " + std::to_string(u));
    if (!rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
        rows_[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        ++m_;
    }
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge_unchecked(u, v);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge_unchecked(u, v);
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
    const int n = static_cast<int>(rows.size());
    if (n > kMaxVertices)
        throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
    Graph g;
    g.n_ = n;
    int twice_m = 0;
    for (int v = 0; v < n; ++v) {
        const auto& row = rows[static_cast<std::size_t>(v)];
        if (row[static_cast<std::size_t>(v)])
            throw std::invalid_argument("nonzero diagonal at vertex " + std::to_string(v));
        for (int u = v + 1; u < n; ++u)
            if (row[static_cast<std::size_t>(u)] !=
                rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
                throw std::invalid_argument("asymmetric adjacency at (" + std::to_string(v) +
                                            ", " + std::to_string(u) + ")");
        // Bits at positions >= n must be clear.
        if ((row >> static_cast<std::size_t>(n)).any())
            throw std::invalid_argument("adjacency bits beyond vertex count");
        twice_m += static_cast<int>(row.count());
    }
    g.m_ = twice_m / 2;
    g.rows_ = std::move(rows);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const int n = g.vertex_count();
    s.sequence.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) s.sequence.push_back(g.degree(v));
    if (n > 0) {
        int lo = s.sequence[0], hi = s.sequence[0];
        for (int d : s.sequence) {
            if (d < lo) lo = d;
            if (d > hi) hi = d;
        }
        s.min_degree = lo;
        s.max_degree = hi;
    }
    return s;
}

ComponentPartition components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentPartition p;
    p.labels.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (p.labels[static_cast<std::size_t>(root)] >= 0) continue;
        const int label = p.kappa++;
        stack.push_back(root);
        p.labels[static_cast<std::size_t>(root)] = label;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            const VertexSet& nb = g.neighbors(v);
            for (int u = 0; u < n; ++u) {
                if (nb[static_cast<std::size_t>(u)] && p.labels[static_cast<std::size_t>(u)] < 0) {
                    p.labels[static_cast<std::size_t>(u)] = label;
                    stack.push_back(u);
                }
            }
        }
    }
    return p;
}

bool is_connected(const Graph& g) { return components(g).kappa <= 1; }

int cyclomatic_number(const Graph& g) {
    return g.edge_count() - g.vertex_count() + components(g).kappa;
}

Graph blow_up(const Graph& g, const std::vector<int>& multiplicities) {
    const int n = g.vertex_count();
    if (static_cast<int>(multiplicities.size()) != n)
        throw std::invalid_argument("multiplicity vector length " +
                                    std::to_string(multiplicities.size()) +
                                    " does not match vertex count " + std::to_string(n));
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        if (multiplicities[static_cast<std::size_t>(v)] < 1)
            throw std::invalid_argument("multiplicity of vertex " + std::to_string(v) +
                                        " must be positive");
        total += multiplicities[static_cast<std::size_t>(v)];
    }
    if (total > kMaxVertices)
        throw resource_error("blow-up has " + std::to_string(total) + " vertices, cap is " +
                             std::to_string(kMaxVertices));

    std::vector<int> block_start(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
        block_start[static_cast<std::size_t>(v) + 1] =
            block_start[static_cast<std::size_t>(v)] + multiplicities[static_cast<std::size_t>(v)];

    std::vector<VertexSet> rows(static_cast<std::size_t>(total));
    for (int u = 0; u < n; ++u) {
        VertexSet joined;  // union of blocks of g-neighbors of u
        for (int w = 0; w < n; ++w) {
            if (!g.has_edge(u, w)) continue;
            for (int x = block_start[static_cast<std::size_t>(w)];
                 x < block_start[static_cast<std::size_t>(w) + 1]; ++x)
                joined.set(static_cast<std::size_t>(x));
        }
        for (int x = block_start[static_cast<std::size_t>(u)];
             x < block_start[static_cast<std::size_t>(u) + 1]; ++x)
            rows[static_cast<std::size_t>(x)] = joined;
    }
    return Graph::from_rows(std::move(rows));
}

}  // namespace sgraph
