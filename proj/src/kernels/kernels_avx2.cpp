// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "jayalab/kernels.hpp"

namespace jayalab::simd::detail {

namespace {

inline __m256d abs_pd(__m256d v)
{
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

inline double hsum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

void jaya_update_avx2(const double* x, const double* best, const double* worst,
                      const double* r1, const double* r2, const double* lower,
                      const double* upper, double* out, std::size_t d)
{
    std::size_t j = 0;
    for (; j + 4 <= d; j += 4) {
        const __m256d vx = _mm256_loadu_pd(x + j);
        const __m256d ax = abs_pd(vx);
        const __m256d toward = _mm256_mul_pd(_mm256_loadu_pd(r1 + j),
                                             _mm256_sub_pd(_mm256_loadu_pd(best + j), ax));
        const __m256d away = _mm256_mul_pd(_mm256_loadu_pd(r2 + j),
                                           _mm256_sub_pd(_mm256_loadu_pd(worst + j), ax));
        const __m256d v = _mm256_sub_pd(_mm256_add_pd(vx, toward), away);
        // Operand order mirrors std::max(v, lo) / std::min(v, hi) so signed
        // zeros resolve the same way as the scalar reference.
        const __m256d lo = _mm256_max_pd(_mm256_loadu_pd(lower + j), v);
        _mm256_storeu_pd(out + j, _mm256_min_pd(_mm256_loadu_pd(upper + j), lo));
    }
    for (; j < d; ++j) {
        const double ax = std::fabs(x[j]);
        const double v = (x[j] + r1[j] * (best[j] - ax)) - r2[j] * (worst[j] - ax);
        out[j] = std::min(std::max(v, lower[j]), upper[j]);
    }
}

double sum_squares_avx2(const double* x, std::size_t d)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= d; j += 4) {
        const __m256d v = _mm256_loadu_pd(x + j);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double s = hsum(acc);
    for (; j < d; ++j)
        s += x[j] * x[j];
    return s;
}

double rosenbrock_avx2(const double* x, std::size_t d)
{
    if (d < 2)
        return 0.0;
    const std::size_t terms = d - 1;
    const __m256d hundred = _mm256_set1_pd(100.0);
    const __m256d one = _mm256_set1_pd(1.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= terms; i += 4) {
        const __m256d xi = _mm256_loadu_pd(x + i);
        const __m256d xn = _mm256_loadu_pd(x + i + 1);
        const __m256d a = _mm256_sub_pd(xn, _mm256_mul_pd(xi, xi));
        const __m256d b = _mm256_sub_pd(one, xi);
        acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_mul_pd(hundred, _mm256_mul_pd(a, a)),
                                               _mm256_mul_pd(b, b)));
    }
    double s = hsum(acc);
    for (; i < terms; ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = 1.0 - x[i];
        s += 100.0 * (a * a) + b * b;
    }
    return s;
}

double abs_floor_sum_avx2(const double* x, std::size_t d)
{
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= d; j += 4)
        acc = _mm256_add_pd(acc, _mm256_floor_pd(abs_pd(_mm256_loadu_pd(x + j))));
    double s = hsum(acc);
    for (; j < d; ++j)
        s += std::floor(std::fabs(x[j]));
    return s;
}

} // namespace

const KernelSet& avx2_kernel_set()
{
    static const KernelSet set{Isa::avx2, &jaya_update_avx2, &sum_squares_avx2,
                               &rosenbrock_avx2, &abs_floor_sum_avx2};
    return set;
}

} // namespace jayalab::simd::detail
