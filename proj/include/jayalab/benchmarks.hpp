#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jayalab/population.hpp"

namespace jayalab {

// Names accepted by benchmark() and by the CLI's --function flag:
// ackley, rosenbrock, chung_reynolds, step, goldstein_price.
std::vector<std::string> benchmark_names();

// The catalog entry with its standard dimension, or with `dimension`
// coordinates for the scalable functions. Throws LookupError for unknown
// names and ConfigError when goldstein_price is asked for d != 2.
ProblemSpec benchmark(std::string_view name, std::optional<std::size_t> dimension = {});

// benchmark(name).evaluate(x) with the catalog's standard dimension for
// fixed-size functions and x.size() for the scalable ones.
double evaluate_benchmark(std::string_view name, std::span<const double> x);

namespace objectives {
double ackley(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double chung_reynolds(std::span<const double> x);
double step(std::span<const double> x);
double goldstein_price(std::span<const double> x);
} // namespace objectives

} // namespace jayalab
