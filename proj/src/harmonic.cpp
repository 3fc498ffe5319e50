#include "jayalab/harmonic.hpp"

#include <cmath>
#include <memory>
#include <mutex>

namespace jayalab {

HarmonicTable::HarmonicTable(std::size_t max_n)
{
    values_.resize(max_n + 1);
    values_[0] = 0.0;
    double sum = 0.0;
    double comp = 0.0; // Neumaier compensation
    for (std::size_t j = 1; j <= max_n; ++j) {
        const double term = 1.0 / static_cast<double>(j);
        const double t = sum + term;
        comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        values_[j] = sum + comp;
    }
}

namespace {

// Grown by doubling so repeated calls with slowly increasing n stay cheap.
class SharedHarmonic {
public:
    double get(std::size_t n)
    {
        std::scoped_lock lock(mutex_);
        if (!table_ || table_->capacity() < n) {
            std::size_t cap = table_ ? table_->capacity() : 1024;
            while (cap < n)
                cap *= 2;
            table_ = std::make_unique<HarmonicTable>(std::min(cap, kHarmonicDirectLimit));
        }
        return (*table_)(n);
    }

private:
    std::mutex mutex_;
    std::unique_ptr<HarmonicTable> table_;
};

} // namespace

double harmonic(std::size_t n)
{
    if (n <= kHarmonicDirectLimit) {
        static SharedHarmonic shared;
        return shared.get(n);
    }
    const double x = static_cast<double>(n);
    const double inv2 = 1.0 / (x * x);
    return std::log(x) + kEulerGamma + 0.5 / x - inv2 / 12.0 + inv2 * inv2 / 120.0;
}

} // namespace jayalab
