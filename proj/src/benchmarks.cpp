#include "jayalab/benchmarks.hpp"

#include <cmath>
#include <numbers>

#include "jayalab/errors.hpp"
#include "jayalab/kernels.hpp"

namespace jayalab {

namespace objectives {

double ackley(std::span<const double> x)
{
    const double d = static_cast<double>(x.size());
    double cos_sum = 0.0;
    for (double v : x)
        cos_sum += std::cos(2.0 * std::numbers::pi * v);
    return -20.0 * std::exp(-0.2 * std::sqrt(simd::sum_squares(x) / d)) - std::exp(cos_sum / d)
           + 20.0 + std::numbers::e;
}

double rosenbrock(std::span<const double> x)
{
    return simd::rosenbrock(x);
}

double chung_reynolds(std::span<const double> x)
{
    const double s = simd::sum_squares(x);
    return s * s;
}

double step(std::span<const double> x)
{
    return simd::abs_floor_sum(x);
}

double goldstein_price(std::span<const double> x)
{
    const double x1 = x[0];
    const double x2 = x[1];
    const double s = x1 + x2 + 1.0;
    const double t = 2.0 * x1 - 3.0 * x2;
    const double a = 1.0 + s * s * (19.0 - 14.0 * x1 + 3.0 * x1 * x1 - 14.0 * x2 + 6.0 * x1 * x2 + 3.0 * x2 * x2);
    const double b = 30.0 + t * t * (18.0 - 32.0 * x1 + 12.0 * x1 * x1 + 48.0 * x2 - 36.0 * x1 * x2 + 27.0 * x2 * x2);
    return a * b;
}

} // namespace objectives

namespace {

struct Entry {
    std::string_view name;
    std::size_t dimension;
    bool scalable;
    double bound;
    double optimum;
    std::string_view location;
    Objective objective;
    double optimizer_coordinate; // for scalable entries
};

const std::vector<Entry>& entries()
{
    static const std::vector<Entry> table{
        {"ackley", 30, true, 10.0, 0.0, "(0, ..., 0)", objectives::ackley, 0.0},
        {"rosenbrock", 30, true, 10.0, 0.0, "(1, ..., 1)", objectives::rosenbrock, 1.0},
        {"chung_reynolds", 30, true, 10.0, 0.0, "(0, ..., 0)", objectives::chung_reynolds, 0.0},
        {"step", 30, true, 100.0, 0.0, "any x with every x_i in (-1, 1)", objectives::step, 0.0},
        {"goldstein_price", 2, false, 2.0, 3.0, "(0, -1)", objectives::goldstein_price, 0.0},
    };
    return table;
}

const Entry& lookup(std::string_view name)
{
    for (const auto& e : entries())
        if (e.name == name)
            return e;
    throw LookupError("unknown benchmark function '" + std::string(name) + "'");
}

} // namespace

std::vector<std::string> benchmark_names()
{
    std::vector<std::string> out;
    for (const auto& e : entries())
        out.emplace_back(e.name);
    return out;
}

ProblemSpec benchmark(std::string_view name, std::optional<std::size_t> dimension)
{
    const Entry& e = lookup(name);
    const std::size_t d = dimension.value_or(e.dimension);
    if (d == 0 || (!e.scalable && d != e.dimension))
        throw ConfigError(std::string(name) + " is not defined for dimension " + std::to_string(d));

    ProblemSpec spec;
    spec.name = std::string(e.name);
    spec.dimension = d;
    spec.lower.assign(d, -e.bound);
    spec.upper.assign(d, e.bound);
    spec.objective = e.objective;
    spec.known_optimum = e.optimum;
    spec.optimizer_location = std::string(e.location);
    if (e.scalable)
        spec.optimizer.assign(d, e.optimizer_coordinate);
    else
        spec.optimizer = {0.0, -1.0};
    return spec;
}

double evaluate_benchmark(std::string_view name, std::span<const double> x)
{
    const Entry& e = lookup(name);
    const std::size_t d = e.scalable ? x.size() : e.dimension;
    JAYALAB_EXPECTS(x.size() == d && d > 0, std::string(name) + ": wrong dimension "
                                                + std::to_string(x.size()));
    return e.objective(x);
}

} // namespace jayalab
