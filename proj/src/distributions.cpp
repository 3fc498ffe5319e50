#include "jayalab/distributions.hpp"

#include <charconv>
#include <cmath>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "jayalab/errors.hpp"
#include "jayalab/harmonic.hpp"
#include "jayalab/quadrature.hpp"

namespace jayalab {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;
constexpr double kNormalHalfWidth = 12.0; // in standard deviations
constexpr double kNormalQuadTolerance = 1e-10;

double standard_normal_sf(double z)
{
    return 0.5 * std::erfc(z * kInvSqrt2);
}

double standard_normal_log_cdf(double z)
{
    if (z > 0.0)
        return std::log1p(-standard_normal_sf(z));
    return std::log(standard_normal_sf(-z));
}

std::vector<double> split_params(std::string_view text, std::string_view& head)
{
    std::vector<double> params;
    const auto colon = text.find(':');
    head = text.substr(0, colon);
    if (colon == std::string_view::npos)
        return params;
    std::string_view rest = text.substr(colon + 1);
    while (true) {
        const auto next = rest.find(':');
        const std::string piece(rest.substr(0, next));
        try {
            std::size_t used = 0;
            params.push_back(std::stod(piece, &used));
            if (used != piece.size())
                throw std::invalid_argument(piece);
        } catch (const std::exception&) {
            throw ConfigError("bad distribution parameter '" + piece + "'");
        }
        if (next == std::string_view::npos)
            break;
        rest = rest.substr(next + 1);
    }
    return params;
}

} // namespace

Distribution::Distribution(Kind kind, double p0, double p1) : kind_(kind), p0_(p0), p1_(p1) {}

Distribution Distribution::uniform(double a, double b)
{
    if (!(b > a) || !std::isfinite(a) || !std::isfinite(b))
        throw ConfigError("uniform distribution needs finite a < b");
    return {Kind::uniform, a, b};
}

Distribution Distribution::exponential(double lambda)
{
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ConfigError("exponential distribution needs lambda > 0");
    return {Kind::exponential, lambda, 0.0};
}

Distribution Distribution::normal(double mu, double sigma)
{
    if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma))
        throw ConfigError("normal distribution needs sigma > 0");
    return {Kind::normal, mu, sigma};
}

Distribution Distribution::logistic()
{
    return {Kind::logistic, 0.0, 1.0};
}

Distribution Distribution::parse(std::string_view text)
{
    std::string_view head;
    const auto params = split_params(text, head);
    auto want = [&](std::size_t max) {
        if (params.size() > max)
            throw ConfigError("too many parameters for distribution '" + std::string(head) + "'");
    };
    if (head == "uniform") {
        want(2);
        if (params.size() == 1)
            throw ConfigError("uniform takes both a and b");
        return params.empty() ? uniform() : uniform(params[0], params[1]);
    }
    if (head == "exponential") {
        want(1);
        return params.empty() ? exponential() : exponential(params[0]);
    }
    if (head == "normal") {
        want(2);
        if (params.size() == 1)
            throw ConfigError("normal takes both mu and sigma");
        return params.empty() ? normal() : normal(params[0], params[1]);
    }
    if (head == "logistic") {
        want(0);
        return logistic();
    }
    throw LookupError("unknown distribution '" + std::string(head)
                      + "' (expected uniform|exponential|normal|logistic)");
}

std::string Distribution::name() const
{
    switch (kind_) {
    case Kind::uniform: return "uniform";
    case Kind::exponential: return "exponential";
    case Kind::normal: return "normal";
    case Kind::logistic: return "logistic";
    }
    return "unknown";
}

std::string Distribution::describe() const
{
    std::ostringstream os;
    os << name();
    switch (kind_) {
    case Kind::uniform: os << '(' << p0_ << ',' << p1_ << ')'; break;
    case Kind::exponential: os << '(' << p0_ << ')'; break;
    case Kind::normal: os << '(' << p0_ << ',' << p1_ << ')'; break;
    case Kind::logistic: os << "(0,1)"; break;
    }
    return os.str();
}

double Distribution::pdf(double x) const
{
    switch (kind_) {
    case Kind::uniform:
        return (x < p0_ || x > p1_) ? 0.0 : 1.0 / (p1_ - p0_);
    case Kind::exponential:
        return x < 0.0 ? 0.0 : p0_ * std::exp(-p0_ * x);
    case Kind::normal: {
        const double z = (x - p0_) / p1_;
        return kInvSqrt2Pi / p1_ * std::exp(-0.5 * z * z);
    }
    case Kind::logistic: {
        const double e = std::exp(-std::fabs(x));
        return e / ((1.0 + e) * (1.0 + e));
    }
    }
    return 0.0;
}

double Distribution::cdf(double x) const
{
    switch (kind_) {
    case Kind::uniform:
        if (x <= p0_) return 0.0;
        if (x >= p1_) return 1.0;
        return (x - p0_) / (p1_ - p0_);
    case Kind::exponential:
        return x <= 0.0 ? 0.0 : -std::expm1(-p0_ * x);
    case Kind::normal:
        return standard_normal_sf(-(x - p0_) / p1_);
    case Kind::logistic:
        return sf(-x);
    }
    return 0.0;
}

double Distribution::sf(double x) const
{
    switch (kind_) {
    case Kind::uniform:
        if (x <= p0_) return 1.0;
        if (x >= p1_) return 0.0;
        return (p1_ - x) / (p1_ - p0_);
    case Kind::exponential:
        return x <= 0.0 ? 1.0 : std::exp(-p0_ * x);
    case Kind::normal:
        return standard_normal_sf((x - p0_) / p1_);
    case Kind::logistic:
        if (x >= 0.0) {
            const double e = std::exp(-x);
            return e / (1.0 + e);
        }
        return 1.0 / (1.0 + std::exp(x));
    }
    return 0.0;
}

double Distribution::effective_lower() const
{
    switch (kind_) {
    case Kind::uniform: return p0_;
    case Kind::exponential: return 0.0;
    case Kind::normal: return p0_ - kNormalHalfWidth * p1_;
    case Kind::logistic: return -50.0;
    }
    return 0.0;
}

double Distribution::effective_upper() const
{
    switch (kind_) {
    case Kind::uniform: return p1_;
    case Kind::exponential: return 50.0 / p0_;
    case Kind::normal: return p0_ + kNormalHalfWidth * p1_;
    case Kind::logistic: return 50.0;
    }
    return 0.0;
}

namespace {

double integrate_standard_normal_max(std::size_t n)
{
    const double m = static_cast<double>(n);
    auto integrand = [m](double x) {
        const double log_f = std::log(m) + (m - 1.0) * standard_normal_log_cdf(x) - 0.5 * x * x;
        return x * kInvSqrt2Pi * std::exp(log_f);
    };
    return integrate(integrand, -kNormalHalfWidth, kNormalHalfWidth, kNormalQuadTolerance, 24).value;
}

class NormalMaxMemo {
public:
    double get(std::size_t n)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = values_.find(n); it != values_.end())
                return it->second;
        }
        const double v = integrate_standard_normal_max(n);
        std::unique_lock lock(mutex_);
        return values_.emplace(n, v).first->second;
    }

private:
    std::shared_mutex mutex_;
    std::unordered_map<std::size_t, double> values_;
};

} // namespace

double standard_normal_expected_max(std::size_t n)
{
    JAYALAB_EXPECTS(n >= 1, "expected_max: n must be at least 1");
    static NormalMaxMemo memo;
    return memo.get(n);
}

double expected_max(const Distribution& dist, std::size_t n)
{
    JAYALAB_EXPECTS(n >= 1, "expected_max: n must be at least 1");
    const double m = static_cast<double>(n);
    switch (dist.kind()) {
    case Distribution::Kind::uniform:
        return (dist.a() + dist.b() * m) / (m + 1.0);
    case Distribution::Kind::exponential:
        return harmonic(n) / dist.lambda();
    case Distribution::Kind::normal:
        return dist.mu() + dist.sigma() * standard_normal_expected_max(n);
    case Distribution::Kind::logistic:
        return harmonic(n - 1);
    }
    return 0.0;
}

double exceed_prob(const Distribution& dist, double threshold)
{
    return dist.sf(threshold);
}

} // namespace jayalab
