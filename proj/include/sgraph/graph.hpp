// graph.hpp — simple undirected graph on a packed bit-matrix, plus basic
// structural queries (degrees, components, cyclomatic number, blow-ups).
#pragma once

#include <bitset>
#include <cassert>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace sgraph {

// Hard capacity of the adjacency storage. Everything in this library is
// desk-scale; 128 covers the largest constructed family (barbells to k = 50,
// n = 100) with room to spare.
inline constexpr int kMaxVertices = 128;

using VertexSet = std::bitset<kMaxVertices>;

// Immutable simple undirected graph. Adjacency is one bitset row per vertex;
// rows are symmetric and the diagonal is zero. Vertices are 0-based
// contiguous integers. Edge test is O(1), neighbor scans O(n/64) words.
class Graph {
public:
    Graph() = default;

    // Edgeless graph on n vertices.
    explicit Graph(int n);

    Graph(int n, std::initializer_list<std::pair<int, int>> edges);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    // Builds from raw adjacency rows; validates symmetry and zero diagonal.
    static Graph from_rows(std::vector<VertexSet> rows);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const {
        assert(u >= 0 && u < n_ && v >= 0 && v < n_);
        return rows_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
    }

    const VertexSet& neighbors(int v) const {
        assert(v >= 0 && v < n_);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).count()); }

    // All edges as (u, v) with u < v, lexicographic.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && rows_ == other.rows_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> rows_;

    void add_edge_unchecked(int u, int v);
};

struct DegreeStats {
    // Absent when n = 0.
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::vector<int> sequence;  // degree of vertex v at index v

    bool regular() const {
        return min_degree && max_degree && *min_degree == *max_degree;
    }
};

struct ComponentPartition {
    std::vector<int> labels;  // vertex -> component index (0-based, by smallest vertex)
    int kappa = 0;            // number of components
};

DegreeStats degree_stats(const Graph& g);

ComponentPartition components(const Graph& g);

bool is_connected(const Graph& g);

// c = m - n + kappa; zero exactly on forests.
int cyclomatic_number(const Graph& g);

// Replaces each vertex v by an independent set of size multiplicities[v],
// completely joining two sets iff the original vertices were adjacent.
// Blocks are laid out in vertex order: vertex v's block occupies the
// multiplicities[0] + ... + multiplicities[v-1] .. (+ multiplicities[v]) range.
// Throws std::invalid_argument on non-positive multiplicities or size
// mismatch, resource_error if the result would exceed kMaxVertices.
Graph blow_up(const Graph& g, const std::vector<int>& multiplicities);

}  // namespace sgraph
