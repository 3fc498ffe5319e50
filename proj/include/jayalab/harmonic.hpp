#pragma once

#include <cstddef>
#include <numbers>
#include <vector>

namespace jayalab {

inline constexpr double kEulerGamma = std::numbers::egamma_v<double>; // 0.5772156649015329
inline constexpr double kLn2 = std::numbers::ln2_v<double>;            // 0.6931471805599453

// Cached H_0..H_N, built with compensated summation.
class HarmonicTable {
public:
    explicit HarmonicTable(std::size_t max_n);

    std::size_t capacity() const noexcept { return values_.size() - 1; }
    double operator()(std::size_t n) const { return values_.at(n); }

private:
    std::vector<double> values_;
};

inline constexpr std::size_t kHarmonicDirectLimit = 1'000'000;

// H_n = sum_{j=1}^{n} 1/j with H_0 = 0. Tabulated up to
// kHarmonicDirectLimit; beyond that ln n + gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4).
double harmonic(std::size_t n);

} // namespace jayalab
