#pragma once

#include <cstdint>
#include <random>

namespace jayalab {

// One independent random stream per run. The engine is seeded from
// (seed, stream_id) through std::seed_seq, so an ensemble can hand out
// streams by run index without any shared state.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id);

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1) with 53 random mantissa bits. Implemented here
    // rather than via std::uniform_real_distribution so that draw
    // sequences are identical across standard library implementations.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform on [lo, hi]; returns lo when the interval is degenerate.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // Uniform integer on [0, bound).  Lemire's nearly-divisionless method.
    std::uint64_t below(std::uint64_t bound);

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

} // namespace jayalab
