#pragma once

#include <cstddef>
#include <functional>

namespace jayalab {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t intervals = 0;
};

// Globally adaptive Gauss-Kronrod (31-point) integration on [a, b] to an
// absolute error target. The range is first cut into `initial_pieces`
// equal parts; the interval with the largest error estimate is bisected
// until the summed estimate drops below abs_tol. Throws NumericError if
// max_intervals is reached first.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, std::size_t initial_pieces = 1,
                           std::size_t max_intervals = 4000);

} // namespace jayalab
