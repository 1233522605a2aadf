#include "sgraph/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "sgraph/errors.hpp"

namespace sgraph {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double sum = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            const double x = a[static_cast<std::size_t>(p) * n + q];
            sum += 2.0 * x * x;
        }
    return std::sqrt(sum);
}

}  // namespace

EigenSolution jacobi_eigenvalues(const std::vector<double>& matrix, int n, double off_tol,
                                 int max_sweeps) {
    if (n < 0 || matrix.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw std::invalid_argument("jacobi: matrix size does not match n");

    std::vector<double> a = matrix;
    std::vector<double> v(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;

    // Frobenius norm is invariant under the rotations, so compute it once.
    double frob = 0.0;
    for (double x : a) frob += x * x;
    frob = std::sqrt(frob);
    const double threshold = off_tol * frob;

    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    int sweep = 0;
    while (off_diagonal_norm(a, n) > threshold) {
        if (sweep++ >= max_sweeps)
            throw numeric_error("jacobi eigensolver did not converge", sweep);
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = at(p, p), aqq = at(q, q);
                at(p, p) = app - t * apq;
                at(q, q) = aqq + t * apq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = aip - s * (aiq + tau * aip);
                    at(p, i) = at(i, p);
                    at(i, q) = aiq + s * (aip - tau * aiq);
                    at(q, i) = at(i, q);
                }
                for (int i = 0; i < n; ++i) {
                    double& vip = v[static_cast<std::size_t>(i) * n + p];
                    double& viq = v[static_cast<std::size_t>(i) * n + q];
                    const double tp = vip, tq = viq;
                    vip = tp - s * (tq + tau * tp);
                    viq = tq + s * (tp - tau * tq);
                }
            }
        }
    }

    EigenSolution out;
    out.n = n;
    out.sweeps = sweep;
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return at(x, x) > at(y, y);
    });
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int c = 0; c < n; ++c) {
        out.values[static_cast<std::size_t>(c)] = at(order[static_cast<std::size_t>(c)],
                                                     order[static_cast<std::size_t>(c)]);
        for (int r = 0; r < n; ++r)
            out.vectors[static_cast<std::size_t>(r) * n + c] =
                v[static_cast<std::size_t>(r) * n + order[static_cast<std::size_t>(c)]];
    }
    return out;
}

}  // namespace sgraph
