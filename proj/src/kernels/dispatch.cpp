#include <atomic>
#include <cstdlib>
#include <string>

#include "jayalab/errors.hpp"
#include "jayalab/kernels.hpp"

namespace jayalab::simd {

namespace {

bool cpu_supports(Isa isa)
{
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    case Isa::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

const KernelSet* initial_selection()
{
    if (const char* env = std::getenv("JAYA_LAB_SIMD"); env != nullptr && *env != '\0')
        return &kernels_for(parse_isa(env));
    const auto isas = available_isas();
    return &kernels_for(isas.back());
}

std::atomic<const KernelSet*>& active_slot()
{
    static std::atomic<const KernelSet*> slot{initial_selection()};
    return slot;
}

} // namespace

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
    }
    return "unknown";
}

Isa parse_isa(std::string_view name)
{
    if (name == "scalar") return Isa::scalar;
    if (name == "avx2") return Isa::avx2;
    if (name == "neon") return Isa::neon;
    throw ConfigError("unknown SIMD variant '" + std::string(name) + "' (expected scalar|avx2|neon)");
}

std::vector<Isa> available_isas()
{
    std::vector<Isa> out{Isa::scalar};
#if defined(__x86_64__) || defined(__i386__)
    if (cpu_supports(Isa::avx2))
        out.push_back(Isa::avx2);
#endif
#if defined(__aarch64__)
    out.push_back(Isa::neon);
#endif
    return out;
}

const KernelSet& kernels_for(Isa isa)
{
    if (!cpu_supports(isa))
        throw ConfigError("SIMD variant '" + std::string(isa_name(isa)) + "' is not available on this CPU");
    switch (isa) {
#if defined(__x86_64__) || defined(__i386__)
    case Isa::avx2: return detail::avx2_kernel_set();
#endif
#if defined(__aarch64__)
    case Isa::neon: return detail::neon_kernel_set();
#endif
    default: return detail::scalar_kernel_set();
    }
}

const KernelSet& active_kernels()
{
    return *active_slot().load(std::memory_order_acquire);
}

void set_active_isa(Isa isa)
{
    active_slot().store(&kernels_for(isa), std::memory_order_release);
}

void jaya_update(std::span<const double> x, std::span<const double> best,
                 std::span<const double> worst, std::span<const double> r1,
                 std::span<const double> r2, std::span<const double> lower,
                 std::span<const double> upper, std::span<double> out)
{
    const std::size_t d = x.size();
    JAYALAB_EXPECTS(best.size() == d && worst.size() == d && r1.size() == d && r2.size() == d
                        && lower.size() == d && upper.size() == d && out.size() == d,
                    "jaya_update: length mismatch");
    active_kernels().jaya_update(x.data(), best.data(), worst.data(), r1.data(), r2.data(),
                                 lower.data(), upper.data(), out.data(), d);
}

double sum_squares(std::span<const double> x)
{
    return active_kernels().sum_squares(x.data(), x.size());
}

double rosenbrock(std::span<const double> x)
{
    return active_kernels().rosenbrock(x.data(), x.size());
}

double abs_floor_sum(std::span<const double> x)
{
    return active_kernels().abs_floor_sum(x.data(), x.size());
}

} // namespace jayalab::simd
