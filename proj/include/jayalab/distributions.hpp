#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace jayalab {

// The four fitness distributions with analytic treatment of their
// order statistics. Logistic is fixed at location 0, scale 1.
class Distribution {
public:
    enum class Kind { uniform, exponential, normal, logistic };

    static Distribution uniform(double a = 0.0, double b = 1.0);
    static Distribution exponential(double lambda = 1.0);
    static Distribution normal(double mu = 0.0, double sigma = 1.0);
    static Distribution logistic();

    // "uniform", "exponential", "normal", "logistic", optionally followed
    // by colon-separated parameters: "uniform:2:5", "normal:1:0.5",
    // "exponential:3".
    static Distribution parse(std::string_view text);

    Kind kind() const noexcept { return kind_; }
    std::string name() const;
    std::string describe() const; // name with parameters

    double a() const noexcept { return p0_; }
    double b() const noexcept { return p1_; }
    double lambda() const noexcept { return p0_; }
    double mu() const noexcept { return p0_; }
    double sigma() const noexcept { return p1_; }

    double pdf(double x) const;
    double cdf(double x) const;
    // 1 - cdf(x), evaluated without cancellation in the upper tail.
    double sf(double x) const;

    // A finite interval carrying all but a negligible (< 1e-20) share of
    // the mass; used as quadrature range.
    double effective_lower() const;
    double effective_upper() const;

private:
    Distribution(Kind kind, double p0, double p1);

    Kind kind_;
    double p0_;
    double p1_;
};

// E(max of n iid draws). Closed forms for uniform ((a + b n)/(n + 1)),
// exponential (H_n / lambda) and logistic (H_{n-1}); the normal case is
// integrated numerically over mu +- 12 sigma to 1e-10 and memoized per n.
double expected_max(const Distribution& dist, std::size_t n);

// P(X > threshold) for a fresh draw X.
double exceed_prob(const Distribution& dist, double threshold);

// E(max of n standard normals), memoized; thread-safe.
double standard_normal_expected_max(std::size_t n);

} // namespace jayalab
