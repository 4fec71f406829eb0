#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace textcnn {

/// Dense row-major matrix of doubles. All layers and gradients in the
/// library are stored in this form.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

    bool operator==(const Matrix&) const = default;

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Standard product. Throws ShapeError naming both shapes on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& a);

Matrix relu(const Matrix& x);
/// Indicator x > 0; the subgradient at 0 is taken as 0.
Matrix relu_grad(const Matrix& x);

Matrix tanh_elem(const Matrix& x);
Matrix tanh_grad(const Matrix& x);

/// Numerically stabilized softmax over one row of finite values.
std::vector<double> softmax(std::span<const double> logits);

}  // namespace textcnn
