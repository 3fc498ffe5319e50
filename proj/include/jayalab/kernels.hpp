#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

// Data-parallel inner loops used by the optimizers and the benchmark
// objectives. Every kernel has a scalar reference; vector variants are
// selected at runtime from what the CPU supports.
//
// Elementwise kernels (jaya_update, abs_floor_sum) are bit-identical
// across variants. Floating reductions (sum_squares, rosenbrock) reorder
// additions and agree with the reference to a few ulps per term.

namespace jayalab::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
Isa parse_isa(std::string_view name);

struct KernelSet {
    Isa isa;

    // out[j] = clamp(x[j] + r1[j]*(best[j] - |x[j]|) - r2[j]*(worst[j] - |x[j]|), lower[j], upper[j])
    void (*jaya_update)(const double* x, const double* best, const double* worst,
                        const double* r1, const double* r2, const double* lower,
                        const double* upper, double* out, std::size_t d);

    double (*sum_squares)(const double* x, std::size_t d);

    // sum_{i<d-1} 100 (x[i+1] - x[i]^2)^2 + (1 - x[i])^2
    double (*rosenbrock)(const double* x, std::size_t d);

    // sum_i floor(|x[i]|)
    double (*abs_floor_sum)(const double* x, std::size_t d);
};

// Variants compiled into this binary and supported by the running CPU,
// scalar first.
std::vector<Isa> available_isas();

// Throws ConfigError when the variant is unavailable.
const KernelSet& kernels_for(Isa isa);

// The process-wide selection. Defaults to the widest available variant;
// the JAYA_LAB_SIMD environment variable (scalar|avx2|neon) overrides.
const KernelSet& active_kernels();
void set_active_isa(Isa isa);

// Convenience wrappers over active_kernels().
void jaya_update(std::span<const double> x, std::span<const double> best,
                 std::span<const double> worst, std::span<const double> r1,
                 std::span<const double> r2, std::span<const double> lower,
                 std::span<const double> upper, std::span<double> out);
double sum_squares(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double abs_floor_sum(std::span<const double> x);

namespace detail {
const KernelSet& scalar_kernel_set();
#if defined(__x86_64__) || defined(__i386__)
const KernelSet& avx2_kernel_set();
#endif
#if defined(__aarch64__)
const KernelSet& neon_kernel_set();
#endif
} // namespace detail

} // namespace jayalab::simd
