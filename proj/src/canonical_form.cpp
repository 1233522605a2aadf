#include "sgraph/canonical_form.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "sgraph/graph6.hpp"

namespace sgraph {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

class Canonicalizer {
public:
    explicit Canonicalizer(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    std::vector<int> run() {
        if (n_ == 0) return {};
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        std::vector<int> individualized;
        search(std::move(colors), individualized);
        return best_perm_;
    }

private:
    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::vector<std::uint64_t> best_key_;
    std::vector<int> best_perm_;
    std::set<std::vector<int>> automorphisms_;

    // Renumber colors to dense ranks; ordering of (old color, value) pairs is
    // isomorphism-invariant because old colors already are.
    static int normalize(std::vector<int>& colors) {
        std::vector<int> sorted = colors;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int& c : colors)
            c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) -
                                 sorted.begin());
        return static_cast<int>(sorted.size());
    }

    // Iterated color refinement by (color, sorted neighbor-color multiset).
    int refine(std::vector<int>& colors) const {
        int count = normalize(colors);
        for (;;) {
            std::vector<std::vector<int>> sigs(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                auto& sig = sigs[static_cast<std::size_t>(v)];
                sig.push_back(colors[static_cast<std::size_t>(v)]);
                const VertexSet& nb = g_.neighbors(v);
                for (int u = 0; u < n_; ++u)
                    if (nb[static_cast<std::size_t>(u)])
                        sig.push_back(colors[static_cast<std::size_t>(u)]);
                std::sort(sig.begin() + 1, sig.end());
            }
            std::vector<std::vector<int>> uniq = sigs;
            std::sort(uniq.begin(), uniq.end());
            uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
            if (static_cast<int>(uniq.size()) == count) return count;
            count = static_cast<int>(uniq.size());
            for (int v = 0; v < n_; ++v)
                colors[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(uniq.begin(), uniq.end(), sigs[static_cast<std::size_t>(v)]) -
                    uniq.begin());
        }
    }

    std::vector<std::uint64_t> key_for(const std::vector<int>& perm) const {
        const int bits = n_ * (n_ - 1) / 2;
        std::vector<std::uint64_t> key(static_cast<std::size_t>((bits + 63) / 64), 0);
        int t = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i) {
                if (g_.has_edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                    key[static_cast<std::size_t>(t >> 6)] |= std::uint64_t{1} << (63 - (t & 63));
                ++t;
            }
        return key;
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<int> perm(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) perm[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
        std::vector<std::uint64_t> key = key_for(perm);
        if (!have_best_ || key < best_key_) {
            have_best_ = true;
            best_key_ = std::move(key);
            best_perm_ = perm;
        } else if (key == best_key_) {
            // Equal keys give an automorphism mapping the best labeling onto this one.
            std::vector<int> sigma(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                sigma[static_cast<std::size_t>(best_perm_[static_cast<std::size_t>(i)])] =
                    perm[static_cast<std::size_t>(i)];
            automorphisms_.insert(std::move(sigma));
        }
    }

    void search(std::vector<int> colors, std::vector<int>& individualized) {
        const int count = refine(colors);
        if (count == n_) {
            leaf(colors);
            return;
        }
        // First (lowest-color) non-singleton cell is the branching target.
        std::vector<int> cell_size(static_cast<std::size_t>(count), 0);
        for (int v = 0; v < n_; ++v) ++cell_size[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])];
        int target = 0;
        while (cell_size[static_cast<std::size_t>(target)] <= 1) ++target;
        std::vector<int> members;
        for (int v = 0; v < n_; ++v)
            if (colors[static_cast<std::size_t>(v)] == target) members.push_back(v);

        std::vector<int> tried;
        for (int v : members) {
            // Skip v if a previously tried member is equivalent to it under
            // a known automorphism fixing every individualized vertex.
            if (!tried.empty()) {
                Dsu dsu(n_);
                for (const auto& sigma : automorphisms_) {
                    bool fixes = true;
                    for (int w : individualized)
                        if (sigma[static_cast<std::size_t>(w)] != w) {
                            fixes = false;
                            break;
                        }
                    if (!fixes) continue;
                    for (int x = 0; x < n_; ++x) dsu.unite(x, sigma[static_cast<std::size_t>(x)]);
                }
                bool skip = false;
                for (int u : tried)
                    if (dsu.find(u) == dsu.find(v)) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);

            // Individualize v: its cell splits into ({v}, rest), v first.
            std::vector<int> child = colors;
            for (int u = 0; u < n_; ++u)
                child[static_cast<std::size_t>(u)] =
                    2 * child[static_cast<std::size_t>(u)] +
                    ((u != v && colors[static_cast<std::size_t>(u)] ==
                                    colors[static_cast<std::size_t>(v)])
                         ? 1
                         : 0);
            individualized.push_back(v);
            search(std::move(child), individualized);
            individualized.pop_back();
        }
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) { return Canonicalizer(g).run(); }

Graph canonical_relabel(const Graph& g) {
    const int n = g.vertex_count();
    const std::vector<int> perm = canonical_labeling(g);
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) {
                const int a = pos[static_cast<std::size_t>(u)], b = pos[static_cast<std::size_t>(v)];
                rows[static_cast<std::size_t>(a)].set(static_cast<std::size_t>(b));
                rows[static_cast<std::size_t>(b)].set(static_cast<std::size_t>(a));
            }
    return Graph::from_rows(std::move(rows));
}

std::string canonical_form(const Graph& g) { return graph6_encode(canonical_relabel(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace sgraph
