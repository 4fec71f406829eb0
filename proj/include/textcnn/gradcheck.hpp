#pragma once

#include <functional>

#include "textcnn/matrix.hpp"

namespace textcnn {

/// Central-difference check of an analytic gradient against a scalar
/// function f of a matrix. Per coordinate the numeric derivative is
/// (f(x + eps e_i) - f(x - eps e_i)) / (2 eps); the returned value is the
/// maximum over coordinates of
///   |analytic - numeric| / max(|analytic|, |numeric|, 1e-8).
/// Throws NumericError if f evaluates to a non-finite value.
double check_gradient(const std::function<double(const Matrix&)>& f, Matrix x,
                      const Matrix& analytic_grad, double eps);

}  // namespace textcnn
