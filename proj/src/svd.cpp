#include "ranklab/svd.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

extern "C" void openblas_set_num_threads(int);

namespace ranklab {

namespace {

// BLAS threading is pinned to one thread once per process; parallelism in
// this project lives at the trial/run level so results stay bit-reproducible
// for any worker count.
const bool blas_single_threaded = [] {
    openblas_set_num_threads(1);
    return true;
}();

void require_finite(const Matrix& a) {
    for (double x : a.values())
        if (!std::isfinite(x))
            throw std::invalid_argument("matrix has non-finite entries");
}

// Our row-major m x n buffer is, viewed column-major with ld = n, exactly
// A^T (an n x m matrix). Singular values are transpose-invariant and the
// singular vector roles swap, so all LAPACK calls go through the col-major
// interface on the untouched buffer.
std::vector<double> gesdd_values(const Matrix& a) {
    const auto m = static_cast<lapack_int>(a.rows());
    const auto n = static_cast<lapack_int>(a.cols());
    std::vector<double> buf = a.values(); // dgesdd destroys its input
    std::vector<double> s(static_cast<std::size_t>(std::min(m, n)));
    lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'N', n, m, buf.data(), n, s.data(),
                                     nullptr, 1, nullptr, 1);
    if (info < 0)
        throw std::invalid_argument("invalid argument to dgesdd");
    if (info > 0)
        throw std::runtime_error("SVD did not converge within LAPACK's sweep limit");
    return s;
}

} // namespace

std::vector<double> singular_values(const Matrix& a) {
    require_finite(a);
    return gesdd_values(a);
}

SvdResult svd_full(const Matrix& a) {
    require_finite(a);
    const auto m = static_cast<lapack_int>(a.rows());
    const auto n = static_cast<lapack_int>(a.cols());
    const lapack_int k = std::min(m, n);

    // Decompose B = A^T (n x m col-major view of our buffer): B = Ub S Vb^T,
    // hence A = Vb S Ub^T, i.e. U_A = Vb and V_A = Ub.
    std::vector<double> buf = a.values();
    std::vector<double> s(static_cast<std::size_t>(k));
    std::vector<double> ub(static_cast<std::size_t>(n) * k);  // col-major n x k
    std::vector<double> vtb(static_cast<std::size_t>(k) * m); // col-major k x m
    lapack_int info = LAPACKE_dgesdd(LAPACK_COL_MAJOR, 'S', n, m, buf.data(), n, s.data(),
                                     ub.data(), n, vtb.data(), k);
    if (info < 0)
        throw std::invalid_argument("invalid argument to dgesdd");
    if (info > 0)
        throw std::runtime_error("SVD did not converge within LAPACK's sweep limit");

    SvdResult out;
    out.singular_values = std::move(s);

    // vtb col-major (k x m) re-read row-major is the m x k matrix Vb = U_A.
    out.left_vectors = Matrix(a.rows(), static_cast<std::size_t>(k), std::move(vtb));

    // ub col-major (n x k) re-read row-major is Ub^T = V_A^T; transpose once.
    Matrix vt(static_cast<std::size_t>(k), a.cols(), std::move(ub));
    out.right_vectors = vt.transposed();
    return out;
}

Matrix pseudoinverse(const Matrix& a, double tol) {
    if (tol < 0.0)
        throw std::invalid_argument("pseudoinverse tolerance must be >= 0");
    SvdResult svd = svd_full(a);
    const auto& s = svd.singular_values;
    const double cutoff = s.empty() ? 0.0 : tol * s.front();

    std::size_t r = 0;
    while (r < s.size() && s[r] > cutoff && s[r] > 0.0)
        ++r;

    Matrix pinv(a.cols(), a.rows()); // zero matrix when rank 0
    if (r == 0)
        return pinv;

    // pinv = V_r * diag(1/s_r) * U_r^T
    const Matrix& u = *svd.left_vectors;
    const Matrix& v = *svd.right_vectors;
    Matrix vs(a.cols(), r);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < r; ++j)
            vs(i, j) = v(i, j) / s[j];
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasTrans, static_cast<int>(a.cols()),
                static_cast<int>(a.rows()), static_cast<int>(r), 1.0, vs.data(),
                static_cast<int>(r), u.data(), static_cast<int>(u.cols()), 0.0, pinv.data(),
                static_cast<int>(pinv.cols()));
    return pinv;
}

ModeSpectra hosvd_mode_spectra(const Tensor& t) {
    if (t.order() < 2)
        throw std::invalid_argument("hosvd_mode_spectra requires tensor order >= 2");
    ModeSpectra out;
    out.spectra.reserve(t.order());
    for (std::size_t k = 0; k < t.order(); ++k)
        out.spectra.push_back(singular_values(mode_unfold(t, k)));
    return out;
}

} // namespace ranklab
