#include "textcnn/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "textcnn/errors.hpp"

namespace textcnn {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

bool Matrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](double v) { return std::isfinite(v); });
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
    }
    Matrix c(a.rows(), b.cols());
    // i-k-j order keeps the inner loop contiguous; the accumulation order
    // over k is the same as the textbook triple loop, so results match it
    // bit for bit.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const auto brow = b.row(k);
            auto crow = c.row(i);
            for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& a) {
    Matrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

Matrix relu(const Matrix& x) {
    Matrix y = x;
    for (double& v : y.values()) v = v > 0.0 ? v : 0.0;
    return y;
}

Matrix relu_grad(const Matrix& x) {
    Matrix y = x;
    for (double& v : y.values()) v = v > 0.0 ? 1.0 : 0.0;
    return y;
}

Matrix tanh_elem(const Matrix& x) {
    Matrix y = x;
    for (double& v : y.values()) v = std::tanh(v);
    return y;
}

Matrix tanh_grad(const Matrix& x) {
    Matrix y = x;
    for (double& v : y.values()) {
        const double t = std::tanh(v);
        v = 1.0 - t * t;
    }
    return y;
}

std::vector<double> softmax(std::span<const double> logits) {
    std::vector<double> out(logits.begin(), logits.end());
    const double mx = *std::max_element(out.begin(), out.end());
    double sum = 0.0;
    for (double& v : out) {
        v = std::exp(v - mx);
        sum += v;
    }
    for (double& v : out) v /= sum;
    return out;
}

}  // namespace textcnn
