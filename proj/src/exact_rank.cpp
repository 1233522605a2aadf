#include "sgraph/exact_rank.hpp"

#include <gmpxx.h>

#include <vector>

namespace sgraph {

namespace {

// One-step Bareiss elimination. Division is exact by Sylvester's identity;
// row/column swaps only permute which minors appear, so exactness is kept.
template <typename Int>
int bareiss_rank(std::vector<Int> a, int n) {
    auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * n + j]; };
    Int prev = 1;
    int rank = 0;
    std::vector<int> col(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) col[static_cast<std::size_t>(j)] = j;

    for (int step = 0; step < n; ++step) {
        int pr = -1, pc = -1;
        for (int i = step; i < n && pr < 0; ++i)
            for (int j = step; j < n; ++j)
                if (at(i, col[static_cast<std::size_t>(j)]) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0) break;
        if (pr != step)
            for (int j = 0; j < n; ++j)
                std::swap(at(step, j), at(pr, j));
        std::swap(col[static_cast<std::size_t>(pc)], col[static_cast<std::size_t>(step)]);

        const Int pivot = at(step, col[static_cast<std::size_t>(step)]);
        for (int i = step + 1; i < n; ++i) {
            const Int head = at(i, col[static_cast<std::size_t>(step)]);
            for (int j = step + 1; j < n; ++j) {
                Int& x = at(i, col[static_cast<std::size_t>(j)]);
                x = (pivot * x - head * at(step, col[static_cast<std::size_t>(j)])) / prev;
            }
            at(i, col[static_cast<std::size_t>(step)]) = 0;
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

template <typename Int>
int rank_of(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Int> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a[static_cast<std::size_t>(i) * n + j] = g.has_edge(i, j) ? 1 : 0;
    return bareiss_rank(std::move(a), n);
}

}  // namespace

int exact_rank(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    if (g.vertex_count() <= kInt128RankLimit) return rank_of<__int128>(g);
    return rank_of<mpz_class>(g);
}

}  // namespace sgraph
