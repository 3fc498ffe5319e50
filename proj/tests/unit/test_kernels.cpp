#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "jayalab/errors.hpp"
#include "jayalab/kernels.hpp"
#include "jayalab/rng.hpp"

using namespace jayalab;
using namespace jayalab::simd;

namespace {

struct Inputs {
    std::vector<double> x, best, worst, r1, r2, lower, upper;
};

Inputs random_inputs(std::size_t d, RngStream& rng)
{
    Inputs in;
    auto fill = [&](std::vector<double>& v, double lo, double hi) {
        v.resize(d);
        for (auto& e : v)
            e = rng.uniform(lo, hi);
    };
    fill(in.x, -12, 12);
    fill(in.best, -10, 10);
    fill(in.worst, -10, 10);
    fill(in.r1, 0, 1);
    fill(in.r2, 0, 1);
    in.lower.assign(d, -10.0);
    in.upper.assign(d, 10.0);
    return in;
}

bool same_bits(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

} // namespace

TEST(Kernels, ScalarAlwaysAvailableAndFirst)
{
    const auto isas = available_isas();
    ASSERT_FALSE(isas.empty());
    EXPECT_EQ(isas.front(), Isa::scalar);
    EXPECT_EQ(kernels_for(Isa::scalar).isa, Isa::scalar);
}

TEST(Kernels, ParseIsa)
{
    EXPECT_EQ(parse_isa("scalar"), Isa::scalar);
    EXPECT_EQ(parse_isa("avx2"), Isa::avx2);
    EXPECT_EQ(parse_isa("neon"), Isa::neon);
    EXPECT_THROW(parse_isa("sse9"), ConfigError);
    EXPECT_EQ(isa_name(Isa::avx2), "avx2");
}

TEST(Kernels, ScalarReferenceValues)
{
    const KernelSet& k = kernels_for(Isa::scalar);
    const double x[] = {1.0, -2.0, 3.0};
    EXPECT_EQ(k.sum_squares(x, 3), 14.0);
    EXPECT_EQ(k.abs_floor_sum(x, 3), 6.0);
    const double ones[] = {1.0, 1.0, 1.0, 1.0};
    EXPECT_EQ(k.rosenbrock(ones, 4), 0.0);
    const double r[] = {0.0, 0.0};
    EXPECT_EQ(k.rosenbrock(r, 2), 1.0);

    const double cur = 2, best = 1, worst = 5, r1 = 1, r2 = 1, lo = -10, hi = 10;
    double out = 0;
    k.jaya_update(&cur, &best, &worst, &r1, &r2, &lo, &hi, &out, 1);
    EXPECT_EQ(out, -2.0);
}

TEST(Kernels, VariantsMatchScalar)
{
    const KernelSet& ref = kernels_for(Isa::scalar);
    RngStream rng(77, 0);
    for (Isa isa : available_isas()) {
        const KernelSet& k = kernels_for(isa);
        for (std::size_t d : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 30u, 31u, 101u}) {
            const Inputs in = random_inputs(d, rng);
            std::vector<double> a(d), b(d);
            ref.jaya_update(in.x.data(), in.best.data(), in.worst.data(), in.r1.data(),
                            in.r2.data(), in.lower.data(), in.upper.data(), a.data(), d);
            k.jaya_update(in.x.data(), in.best.data(), in.worst.data(), in.r1.data(),
                          in.r2.data(), in.lower.data(), in.upper.data(), b.data(), d);
            for (std::size_t j = 0; j < d; ++j)
                EXPECT_TRUE(same_bits(a[j], b[j])) << isa_name(isa) << " d=" << d << " j=" << j;

            EXPECT_EQ(ref.abs_floor_sum(in.x.data(), d), k.abs_floor_sum(in.x.data(), d));

            double abs_sq = 0.0;
            for (double v : in.x)
                abs_sq += v * v;
            EXPECT_NEAR(ref.sum_squares(in.x.data(), d), k.sum_squares(in.x.data(), d),
                        4e-16 * static_cast<double>(d) * abs_sq);

            const double rr = ref.rosenbrock(in.x.data(), d);
            EXPECT_NEAR(rr, k.rosenbrock(in.x.data(), d), 1e-15 * static_cast<double>(d) * std::fabs(rr) + 1e-300);
        }
    }
}

TEST(Kernels, ClampHandlesBoundsExactly)
{
    for (Isa isa : available_isas()) {
        const KernelSet& k = kernels_for(isa);
        const std::size_t d = 8;
        std::vector<double> x(d, 9.0), best(d, 10.0), worst(d, -10.0), r1(d, 1.0), r2(d, 1.0);
        std::vector<double> lo(d, -10.0), hi(d, 10.0), out(d);
        k.jaya_update(x.data(), best.data(), worst.data(), r1.data(), r2.data(), lo.data(), hi.data(),
                      out.data(), d);
        for (double v : out)
            EXPECT_EQ(v, 10.0) << isa_name(isa);
    }
}

TEST(Kernels, SetActiveIsaRoundTrip)
{
    const Isa before = active_kernels().isa;
    set_active_isa(Isa::scalar);
    EXPECT_EQ(active_kernels().isa, Isa::scalar);
    set_active_isa(before);
    EXPECT_EQ(active_kernels().isa, before);
}
