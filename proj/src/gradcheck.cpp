#include "textcnn/gradcheck.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "textcnn/errors.hpp"

namespace textcnn {

double check_gradient(const std::function<double(const Matrix&)>& f, Matrix x,
                      const Matrix& analytic_grad, double eps) {
    if (eps <= 0.0) throw std::invalid_argument("check_gradient: eps must be > 0");
    if (x.rows() != analytic_grad.rows() || x.cols() != analytic_grad.cols()) {
        throw ShapeError("check_gradient: gradient shape " +
                         std::to_string(analytic_grad.rows()) + "x" +
                         std::to_string(analytic_grad.cols()) + " does not match x " +
                         std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
    }
    double max_rel = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double orig = x.values()[i];
        x.values()[i] = orig + eps;
        const double fp = f(x);
        x.values()[i] = orig - eps;
        const double fm = f(x);
        x.values()[i] = orig;
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw NumericError("check_gradient: f evaluated to a non-finite value at coordinate " +
                               std::to_string(i));
        }
        const double numeric = (fp - fm) / (2.0 * eps);
        const double analytic = analytic_grad.values()[i];
        const double denom = std::max({std::abs(analytic), std::abs(numeric), 1e-8});
        max_rel = std::max(max_rel, std::abs(analytic - numeric) / denom);
    }
    return max_rel;
}

}  // namespace textcnn
