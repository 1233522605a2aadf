// jacobi.hpp — cyclic Jacobi eigensolver for dense symmetric matrices.
// Unconditionally convergent on symmetric input; plenty fast at the matrix
// sizes this library handles (n <= 128).
#pragma once

#include <vector>

namespace sgraph {

struct EigenSolution {
    int n = 0;
    std::vector<double> values;   // descending
    std::vector<double> vectors;  // row-major n*n; column c is the eigenvector of values[c]
    int sweeps = 0;

    double vector_entry(int row, int col) const {
        return vectors[static_cast<std::size_t>(row) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(col)];
    }
};

// matrix: row-major n*n, must be symmetric. Terminates when the off-diagonal
// Frobenius norm drops below off_tol * ||A||_F; throws numeric_error (carrying
// the sweep count) if that does not happen within max_sweeps.
EigenSolution jacobi_eigenvalues(const std::vector<double>& matrix, int n,
                                 double off_tol = 1e-12, int max_sweeps = 100);

}  // namespace sgraph
