#include <algorithm>
#include <cmath>

#include "jayalab/kernels.hpp"

namespace jayalab::simd::detail {

namespace {

void jaya_update_scalar(const double* x, const double* best, const double* worst,
                        const double* r1, const double* r2, const double* lower,
                        const double* upper, double* out, std::size_t d)
{
    for (std::size_t j = 0; j < d; ++j) {
        const double ax = std::fabs(x[j]);
        const double toward = r1[j] * (best[j] - ax);
        const double away = r2[j] * (worst[j] - ax);
        const double v = (x[j] + toward) - away;
        out[j] = std::min(std::max(v, lower[j]), upper[j]);
    }
}

double sum_squares_scalar(const double* x, std::size_t d)
{
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        s += x[j] * x[j];
    return s;
}

double rosenbrock_scalar(const double* x, std::size_t d)
{
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * (a * a) + b * b;
    }
    return s;
}

double abs_floor_sum_scalar(const double* x, std::size_t d)
{
    double s = 0.0;
    for (std::size_t j = 0; j < d; ++j)
        s += std::floor(std::fabs(x[j]));
    return s;
}

} // namespace

const KernelSet& scalar_kernel_set()
{
    static const KernelSet set{Isa::scalar, &jaya_update_scalar, &sum_squares_scalar,
                               &rosenbrock_scalar, &abs_floor_sum_scalar};
    return set;
}

} // namespace jayalab::simd::detail
