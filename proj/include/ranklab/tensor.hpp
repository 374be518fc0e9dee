#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ranklab {

// Dense n-dimensional tensor of doubles.
//
// Layout is row-major: the last index varies fastest. All numerics in this
// project are 64-bit; near-rank thresholds of 1e-4/1e-5 sit too close to the
// float32 noise floor.
//
// Tensors are treated as immutable values once shared between threads; the
// mutable accessors exist for construction only.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape);
    Tensor(std::vector<std::size_t> shape, std::vector<double> data);

    std::size_t order() const { return shape_.size(); }
    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t dim(std::size_t k) const;
    std::size_t size() const { return data_.size(); }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }
    const std::vector<double>& values() const { return data_; }

    // Row-major linear offset of a multi-index.
    std::size_t offset(std::span<const std::size_t> idx) const;
    double at(std::span<const std::size_t> idx) const { return data_[offset(idx)]; }
    double& at(std::span<const std::size_t> idx) { return data_[offset(idx)]; }

    bool operator==(const Tensor& other) const = default;

private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

// Row-major dense matrix. Kept separate from order-2 Tensor because most of
// the linear algebra below speaks matrices; conversions are cheap and
// explicit.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    const double* data() const { return data_.data(); }
    double* data() { return data_.data(); }
    const std::vector<double>& values() const { return data_; }

    Matrix transposed() const;
    Tensor as_tensor() const;

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix matrix_from_tensor(const Tensor& t);

// Mode-k unfolding. Rows index mode k; columns enumerate the remaining modes
// in their original order with the last one varying fastest (row-major over
// the reduced index tuple). Under this convention the mode-0 unfolding of a
// matrix is the matrix itself and the mode-1 unfolding is its transpose.
Matrix mode_unfold(const Tensor& t, std::size_t mode);

// Inverse of mode_unfold for the same convention; bit-exact round-trip.
Tensor mode_fold(const Matrix& m, std::size_t mode, std::span<const std::size_t> shape);

double frobenius_norm(const Tensor& t);
double frobenius_norm(const Matrix& m);

// C = A * B via BLAS. Throws on inner-dimension mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

} // namespace ranklab
