#include "jayalab/models.hpp"

#include <cmath>
#include <string>

#include "jayalab/errors.hpp"
#include "jayalab/harmonic.hpp"

namespace jayalab {

namespace {

constexpr double kTailCutoff = 1e-18;

} // namespace

void WorstModelParams::validate() const
{
    if (n == 0)
        throw ConfigError("worst model: n must be at least 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw ConfigError("worst model: p must lie in [0, 1]");
}

double worst_update_pmf(std::size_t m, std::size_t k, const WorstModelParams& params)
{
    params.validate();
    JAYALAB_EXPECTS(k >= 1 && k <= params.n,
                    "worst_update_pmf: k=" + std::to_string(k) + " outside [1, n]");
    JAYALAB_EXPECTS(m <= params.n, "worst_update_pmf: m=" + std::to_string(m) + " exceeds n");
    const double p = params.p;
    if (m == 0)
        return 1.0 - p;
    if (m > k)
        return 0.0;
    const double n = static_cast<double>(params.n);
    const double kd = static_cast<double>(k);
    const double q = p / n;
    // lead = q^m prod_{j<m} (k - j) / (m-1)!
    double lead = q;
    for (std::size_t j = 1; j < m; ++j)
        lead *= q * (kd - static_cast<double>(j)) / static_cast<double>(j);
    return lead * (n + p - p * kd / static_cast<double>(m));
}

std::vector<double> worst_update_pmf_row(std::size_t k, const WorstModelParams& params)
{
    params.validate();
    JAYALAB_EXPECTS(k >= 1 && k <= params.n, "worst_update_pmf_row: k outside [1, n]");
    const double p = params.p;
    const double n = static_cast<double>(params.n);
    const double kd = static_cast<double>(k);
    const double q = p / n;

    std::vector<double> row(k + 1, 0.0);
    row[0] = 1.0 - p;
    double lead = q;
    double mass = row[0];
    for (std::size_t m = 1; m <= k; ++m) {
        if (m > 1)
            lead *= q * (kd - static_cast<double>(m - 1)) / static_cast<double>(m - 1);
        const double term = lead * (n + p - p * kd / static_cast<double>(m));
        row[m] = term;
        mass += term;
        if (term <= kTailCutoff * mass)
            break;
    }
    return row;
}

double worst_update_expectation_given_k(std::size_t k, const WorstModelParams& params)
{
    params.validate();
    JAYALAB_EXPECTS(k >= 1 && k <= params.n,
                    "worst_update_expectation_given_k: k outside [1, n]");
    const double p = params.p;
    const double n = static_cast<double>(params.n);
    const double kd = static_cast<double>(k);
    const double q = p / n;

    double lead = q;
    double expectation = 0.0;
    for (std::size_t m = 1; m <= k; ++m) {
        if (m > 1)
            lead *= q * (kd - static_cast<double>(m - 1)) / static_cast<double>(m - 1);
        const double md = static_cast<double>(m);
        const double contrib = md * lead * (n + p - p * kd / md);
        expectation += contrib;
        if (contrib <= kTailCutoff * expectation)
            break;
    }
    return expectation;
}

double worst_update_expectation(const WorstModelParams& params)
{
    params.validate();
    double total = 0.0;
    for (std::size_t k = 1; k <= params.n; ++k)
        total += worst_update_expectation_given_k(k, params);
    return total / static_cast<double>(params.n);
}

double best_update_expectation(const Distribution& dist, std::size_t n, std::size_t g)
{
    JAYALAB_EXPECTS(n >= 1, "best_update_expectation: n must be at least 1");
    JAYALAB_EXPECTS(g >= 1, "best_update_expectation: g must be at least 1");
    double total = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
        total += exceed_prob(dist, expected_max(dist, g * n + i - 1));
    return total;
}

std::optional<double> best_update_limit(const Distribution& dist)
{
    switch (dist.kind()) {
    case Distribution::Kind::uniform:
        return kLn2;
    case Distribution::Kind::exponential:
    case Distribution::Kind::logistic:
        return std::exp(-kEulerGamma) * kLn2;
    case Distribution::Kind::normal:
        return std::nullopt;
    }
    return std::nullopt;
}

double best_update_upper_bound(const Distribution& dist)
{
    switch (dist.kind()) {
    case Distribution::Kind::uniform:
        return kLn2;
    case Distribution::Kind::exponential:
        return std::exp(-kEulerGamma) * kLn2;
    case Distribution::Kind::normal:
    case Distribution::Kind::logistic:
        return 0.5;
    }
    return 0.5;
}

} // namespace jayalab
