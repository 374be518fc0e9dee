#pragma once

#include "ranklab/tensor.hpp"

#include <optional>
#include <vector>

namespace ranklab {

// Thin SVD of a real matrix A (m x n, k = min(m,n)):
//   A = U * diag(singular_values) * V^T
// with U (m x k) and V (n x k) having orthonormal columns when requested.
struct SvdResult {
    std::vector<double> singular_values; // sorted descending, all >= 0
    std::optional<Matrix> left_vectors;  // U, m x k
    std::optional<Matrix> right_vectors; // V, n x k
};

// Per-mode singular values of a tensor: entry k is the spectrum of the
// mode-k unfolding, sorted descending.
struct ModeSpectra {
    std::vector<std::vector<double>> spectra;
};

// Singular values only, sorted descending. Throws std::invalid_argument on
// non-finite entries and std::runtime_error if the underlying iteration does
// not converge (LAPACK's internal sweep limit; pathological input).
std::vector<double> singular_values(const Matrix& a);

// Full thin SVD with vectors. Same error contract as singular_values.
// Accuracy: absolute error of computed singular values is O(eps * sigma_max),
// which keeps values below the 1e-4/1e-5 diagnostic thresholds trustworthy
// for any matrix with ||A||_F <= 1e3.
SvdResult svd_full(const Matrix& a);

// Moore-Penrose pseudoinverse. Singular values <= tol * sigma_max are treated
// as zero (tol is relative; tol >= 0).
Matrix pseudoinverse(const Matrix& a, double tol);

// Mode spectra of a tensor of order >= 2 (matrix SVD per mode unfolding).
ModeSpectra hosvd_mode_spectra(const Tensor& t);

} // namespace ranklab
