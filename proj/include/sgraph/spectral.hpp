// spectral.hpp — adjacency eigenvalues, inertia and the derived quantities
// s+, s-, energy, tau and B for a single graph.
#pragma once

#include <vector>

#include "sgraph/graph.hpp"

namespace sgraph {

// All comparison tolerances live here. The solver-contract constants
// (residual, zero_consistency) govern computed values and never rescale;
// the first three only affect satisfied/violated/equality classification.
struct Tolerances {
    double comparison = 1e-7;        // satisfaction: left <= right + comparison*max(1,scale)
    double equality = 1e-6;          // equality detection band (reported separately)
    double slack = 1e-6;             // absolute threshold on conjecture slack
    double zero_consistency = 1e-6;  // max |eigenvalue| tolerated in the exact-rank zero block
    double residual = 1e-8;          // eigenpair residual, scaled by max(1, mu_1)
    double jacobi_off = 1e-12;       // eigensolver termination, relative to ||A||_F
    int jacobi_max_sweeps = 100;

    // Uniform rescaling for the CLI --tol override.
    Tolerances scaled(double comparison_tol) const {
        Tolerances t = *this;
        const double factor = comparison_tol / Tolerances{}.comparison;
        t.comparison = comparison_tol;
        t.equality *= factor;
        t.slack *= factor;
        return t;
    }
};

struct Inertia {
    int positive = 0;  // pi
    int negative = 0;  // nu
    int zero = 0;      // gamma

    bool operator==(const Inertia&) const = default;
};

struct SpectralSummary {
    int n = 0;
    int m = 0;
    std::vector<double> eigenvalues;  // descending, length n
    Inertia inertia;
    double s_plus = 0.0;
    double s_minus = 0.0;
    double energy = 0.0;
    double tau = 0.0;           // |mu_n|
    double b_value = 0.0;       // pairwise products within each sign block
    double positive_sum = 0.0;  // PO: sum of positive eigenvalues
    double negative_sum = 0.0;  // NE: -(sum of negative eigenvalues)

    double mu1() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
    double mu_n() const { return eigenvalues.empty() ? 0.0 : eigenvalues.back(); }
};

// Adjacency spectrum, descending. Verifies the eigenpair residuals of the
// underlying solve; throws numeric_error on non-convergence or a residual
// breach (never returns a partial spectrum).
std::vector<double> eigenvalues(const Graph& g, const Tolerances& tol = {});

// Zero count is pinned by exact integer rank; the remaining floating
// eigenvalues split by sign after the gamma smallest-magnitude ones are
// discarded as the zero block. Throws numeric_error if a discarded value is
// too large for a zero (rank and eigensolver disagree).
Inertia inertia(const Graph& g, const Tolerances& tol = {});

SpectralSummary summarize(const Graph& g, const Tolerances& tol = {});

// B recomputed from a summary's sign split (the pairwise-product definition;
// the Li-Wang identity 2*PO^2 = 2m + 2*B is left to the tests).
double b_value(const SpectralSummary& s);

}  // namespace sgraph
