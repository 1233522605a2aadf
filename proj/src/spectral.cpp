#include "sgraph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sgraph/errors.hpp"
#include "sgraph/exact_rank.hpp"
#include "sgraph/jacobi.hpp"

namespace sgraph {

namespace {

std::vector<double> adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j)) {
                a[static_cast<std::size_t>(i) * n + j] = 1.0;
                a[static_cast<std::size_t>(j) * n + i] = 1.0;
            }
    return a;
}

EigenSolution solve_checked(const Graph& g, const Tolerances& tol) {
    const int n = g.vertex_count();
    const std::vector<double> a = adjacency_matrix(g);
    EigenSolution sol = jacobi_eigenvalues(a, n, tol.jacobi_off, tol.jacobi_max_sweeps);

    // Residual check ||A v - mu v|| <= residual * max(1, mu_1) per eigenpair.
    const double bound = tol.residual * std::max(1.0, sol.values.empty() ? 0.0 : sol.values[0]);
    for (int c = 0; c < n; ++c) {
        double norm2 = 0.0;
        for (int r = 0; r < n; ++r) {
            double av = 0.0;
            for (int k = 0; k < n; ++k)
                av += a[static_cast<std::size_t>(r) * n + k] * sol.vector_entry(k, c);
            const double diff = av - sol.values[static_cast<std::size_t>(c)] * sol.vector_entry(r, c);
            norm2 += diff * diff;
        }
        if (std::sqrt(norm2) > bound)
            throw numeric_error("eigenpair residual " + std::to_string(std::sqrt(norm2)) +
                                    " exceeds bound " + std::to_string(bound),
                                sol.sweeps);
    }
    return sol;
}

}  // namespace

std::vector<double> eigenvalues(const Graph& g, const Tolerances& tol) {
    return solve_checked(g, tol).values;
}

SpectralSummary summarize(const Graph& g, const Tolerances& tol) {
    SpectralSummary s;
    s.n = g.vertex_count();
    s.m = g.edge_count();
    if (s.n == 0) return s;

    s.eigenvalues = solve_checked(g, tol).values;

    const int gamma = s.n - exact_rank(g);

    // Indices by ascending magnitude; the first gamma form the zero block.
    std::vector<int> by_abs(static_cast<std::size_t>(s.n));
    std::iota(by_abs.begin(), by_abs.end(), 0);
    std::stable_sort(by_abs.begin(), by_abs.end(), [&](int x, int y) {
        return std::abs(s.eigenvalues[static_cast<std::size_t>(x)]) <
               std::abs(s.eigenvalues[static_cast<std::size_t>(y)]);
    });
    for (int k = 0; k < gamma; ++k) {
        const double v = s.eigenvalues[static_cast<std::size_t>(by_abs[static_cast<std::size_t>(k)])];
        if (std::abs(v) > tol.zero_consistency)
            throw numeric_error("exact rank reports a zero eigenvalue but the eigensolver gives " +
                                std::to_string(v));
    }

    std::vector<double> pos, neg;
    for (int k = gamma; k < s.n; ++k) {
        const double v = s.eigenvalues[static_cast<std::size_t>(by_abs[static_cast<std::size_t>(k)])];
        if (v > 0.0)
            pos.push_back(v);
        else if (v < 0.0)
            neg.push_back(v);
        else
            throw numeric_error("eigenvalue is exactly zero outside the exact-rank zero block");
    }
    s.inertia = Inertia{static_cast<int>(pos.size()), static_cast<int>(neg.size()), gamma};

    for (double v : pos) {
        s.s_plus += v * v;
        s.positive_sum += v;
    }
    for (double v : neg) {
        s.s_minus += v * v;
        s.negative_sum -= v;
    }
    s.energy = s.positive_sum + s.negative_sum;
    s.tau = neg.empty() ? 0.0 : -*std::min_element(neg.begin(), neg.end());
    s.b_value = b_value(s);
    return s;
}

Inertia inertia(const Graph& g, const Tolerances& tol) { return summarize(g, tol).inertia; }

double b_value(const SpectralSummary& s) {
    // Sign blocks read off the descending spectrum after zero-block removal:
    // the first pi entries are the positives, the last nu the negatives.
    const int pi = s.inertia.positive, nu = s.inertia.negative;
    double b = 0.0;
    for (int i = 0; i < pi; ++i)
        for (int j = i + 1; j < pi; ++j)
            b += s.eigenvalues[static_cast<std::size_t>(i)] * s.eigenvalues[static_cast<std::size_t>(j)];
    for (int i = 0; i < nu; ++i)
        for (int j = i + 1; j < nu; ++j)
            b += s.eigenvalues[static_cast<std::size_t>(s.n - nu + i)] *
                 s.eigenvalues[static_cast<std::size_t>(s.n - nu + j)];
    return b;
}

}  // namespace sgraph
