#include "ranklab/tensor.hpp"

#include <cblas.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace ranklab {

namespace {

std::size_t checked_element_count(const std::vector<std::size_t>& shape) {
    if (shape.empty())
        throw std::invalid_argument("tensor order must be >= 1");
    std::size_t n = 1;
    for (std::size_t d : shape) {
        if (d == 0)
            throw std::invalid_argument("tensor dimensions must be >= 1");
        n *= d;
    }
    return n;
}

} // namespace

Tensor::Tensor(std::vector<std::size_t> shape)
    : shape_(std::move(shape)), data_(checked_element_count(shape_), 0.0) {}

Tensor::Tensor(std::vector<std::size_t> shape, std::vector<double> data)
    : shape_(std::move(shape)), data_(std::move(data)) {
    if (checked_element_count(shape_) != data_.size())
        throw std::invalid_argument("tensor data length does not match shape product");
}

std::size_t Tensor::dim(std::size_t k) const {
    if (k >= shape_.size())
        throw std::out_of_range("tensor mode index out of range");
    return shape_[k];
}

std::size_t Tensor::offset(std::span<const std::size_t> idx) const {
    if (idx.size() != shape_.size())
        throw std::invalid_argument("index arity does not match tensor order");
    std::size_t off = 0;
    for (std::size_t k = 0; k < shape_.size(); ++k) {
        if (idx[k] >= shape_[k])
            throw std::out_of_range("tensor index out of range");
        off = off * shape_[k] + idx[k];
    }
    return off;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be >= 1");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("matrix dimensions must be >= 1");
    if (rows * cols != data_.size())
        throw std::invalid_argument("matrix data length does not match rows*cols");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Tensor Matrix::as_tensor() const {
    return Tensor({rows_, cols_}, data_);
}

Matrix matrix_from_tensor(const Tensor& t) {
    if (t.order() != 2)
        throw std::invalid_argument("matrix_from_tensor requires an order-2 tensor");
    return Matrix(t.dim(0), t.dim(1), t.values());
}

Matrix mode_unfold(const Tensor& t, std::size_t mode) {
    if (mode >= t.order())
        throw std::out_of_range("mode index out of range for tensor order");
    const auto& shape = t.shape();
    std::size_t pre = 1, post = 1;
    for (std::size_t k = 0; k < mode; ++k)
        pre *= shape[k];
    for (std::size_t k = mode + 1; k < shape.size(); ++k)
        post *= shape[k];
    const std::size_t mid = shape[mode];

    Matrix out(mid, pre * post);
    const double* src = t.data();
    double* dst = out.data();
    for (std::size_t a = 0; a < pre; ++a)
        for (std::size_t i = 0; i < mid; ++i) {
            const double* s = src + (a * mid + i) * post;
            double* d = dst + i * (pre * post) + a * post;
            for (std::size_t b = 0; b < post; ++b)
                d[b] = s[b];
        }
    return out;
}

Tensor mode_fold(const Matrix& m, std::size_t mode, std::span<const std::size_t> shape) {
    std::vector<std::size_t> sh(shape.begin(), shape.end());
    Tensor out(sh);
    if (mode >= sh.size())
        throw std::out_of_range("mode index out of range for target shape");
    std::size_t pre = 1, post = 1;
    for (std::size_t k = 0; k < mode; ++k)
        pre *= sh[k];
    for (std::size_t k = mode + 1; k < sh.size(); ++k)
        post *= sh[k];
    const std::size_t mid = sh[mode];
    if (m.rows() != mid || m.cols() != pre * post)
        throw std::invalid_argument("unfolding dimensions do not match target shape");

    const double* src = m.data();
    double* dst = out.data();
    for (std::size_t a = 0; a < pre; ++a)
        for (std::size_t i = 0; i < mid; ++i) {
            const double* s = src + i * (pre * post) + a * post;
            double* d = dst + (a * mid + i) * post;
            for (std::size_t b = 0; b < post; ++b)
                d[b] = s[b];
        }
    return out;
}

namespace {

double frobenius_of(std::span<const double> xs) {
    double acc = 0.0;
    for (double x : xs)
        acc += x * x;
    return std::sqrt(acc);
}

} // namespace

double frobenius_norm(const Tensor& t) { return frobenius_of(t.values()); }
double frobenius_norm(const Matrix& m) { return frobenius_of(m.values()); }

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul dimension mismatch: " + std::to_string(a.rows()) +
                                    "x" + std::to_string(a.cols()) + " * " +
                                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    Matrix c(a.rows(), b.cols());
    cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows()),
                static_cast<int>(b.cols()), static_cast<int>(a.cols()), 1.0, a.data(),
                static_cast<int>(a.cols()), b.data(), static_cast<int>(b.cols()), 0.0, c.data(),
                static_cast<int>(c.cols()));
    return c;
}

} // namespace ranklab
