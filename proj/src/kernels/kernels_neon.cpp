#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "jayalab/kernels.hpp"

namespace jayalab::simd::detail {

namespace {

void jaya_update_neon(const double* x, const double* best, const double* worst,
                      const double* r1, const double* r2, const double* lower,
                      const double* upper, double* out, std::size_t d)
{
    std::size_t j = 0;
    for (; j + 2 <= d; j += 2) {
        const float64x2_t vx = vld1q_f64(x + j);
        const float64x2_t ax = vabsq_f64(vx);
        const float64x2_t toward = vmulq_f64(vld1q_f64(r1 + j), vsubq_f64(vld1q_f64(best + j), ax));
        const float64x2_t away = vmulq_f64(vld1q_f64(r2 + j), vsubq_f64(vld1q_f64(worst + j), ax));
        const float64x2_t v = vsubq_f64(vaddq_f64(vx, toward), away);
        const float64x2_t lo = vld1q_f64(lower + j);
        const float64x2_t hi = vld1q_f64(upper + j);
        // Select-based clamp keeps std::max/std::min tie semantics.
        const float64x2_t up = vbslq_f64(vcltq_f64(v, lo), lo, v);
        vst1q_f64(out + j, vbslq_f64(vcltq_f64(hi, up), hi, up));
    }
    for (; j < d; ++j) {
        const double ax = std::fabs(x[j]);
        const double v = (x[j] + r1[j] * (best[j] - ax)) - r2[j] * (worst[j] - ax);
        out[j] = std::min(std::max(v, lower[j]), upper[j]);
    }
}

double sum_squares_neon(const double* x, std::size_t d)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= d; j += 2) {
        const float64x2_t v = vld1q_f64(x + j);
        acc = vaddq_f64(acc, vmulq_f64(v, v));
    }
    double s = vaddvq_f64(acc);
    for (; j < d; ++j)
        s += x[j] * x[j];
    return s;
}

double rosenbrock_neon(const double* x, std::size_t d)
{
    if (d < 2)
        return 0.0;
    const std::size_t terms = d - 1;
    const float64x2_t hundred = vdupq_n_f64(100.0);
    const float64x2_t one = vdupq_n_f64(1.0);
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= terms; i += 2) {
        const float64x2_t xi = vld1q_f64(x + i);
        const float64x2_t xn = vld1q_f64(x + i + 1);
        const float64x2_t a = vsubq_f64(xn, vmulq_f64(xi, xi));
        const float64x2_t b = vsubq_f64(one, xi);
        acc = vaddq_f64(acc, vaddq_f64(vmulq_f64(hundred, vmulq_f64(a, a)), vmulq_f64(b, b)));
    }
    double s = vaddvq_f64(acc);
    for (; i < terms; ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * (a * a) + b * b;
    }
    return s;
}

double abs_floor_sum_neon(const double* x, std::size_t d)
{
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t j = 0;
    for (; j + 2 <= d; j += 2)
        acc = vaddq_f64(acc, vrndmq_f64(vabsq_f64(vld1q_f64(x + j))));
    double s = vaddvq_f64(acc);
    for (; j < d; ++j)
        s += std::floor(std::fabs(x[j]));
    return s;
}

} // namespace

const KernelSet& neon_kernel_set()
{
    static const KernelSet set{Isa::neon, &jaya_update_neon, &sum_squares_neon,
                               &rosenbrock_neon, &abs_floor_sum_neon};
    return set;
}

} // namespace jayalab::simd::detail
