#include "jayalab/population.hpp"

#include <algorithm>
#include <cmath>

#include "jayalab/errors.hpp"

namespace jayalab {

double ProblemSpec::evaluate(std::span<const double> genes) const
{
    JAYALAB_EXPECTS(genes.size() == dimension,
                    name + ": expected " + std::to_string(dimension) + " genes, got "
                        + std::to_string(genes.size()));
    return objective(genes);
}

void ProblemSpec::validate() const
{
    if (dimension == 0)
        throw ConfigError(name + ": dimension must be positive");
    if (lower.size() != dimension || upper.size() != dimension)
        throw ConfigError(name + ": bounds length does not match dimension");
    if (!objective)
        throw ConfigError(name + ": missing objective");
    for (std::size_t i = 0; i < dimension; ++i) {
        const double lo = lower[i];
        const double hi = upper[i];
        if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
            throw ConfigError(name + ": invalid bounds at coordinate " + std::to_string(i));
    }
}

std::vector<double> Population::fitnesses() const
{
    std::vector<double> out;
    out.reserve(members.size());
    for (const auto& m : members)
        out.push_back(m.fitness);
    return out;
}

ScanResult find_extreme(std::span<const double> fitnesses, Extreme which)
{
    JAYALAB_EXPECTS(!fitnesses.empty(), "find_extreme: empty population");
    ScanResult r{0, 0, 1};
    for (std::size_t j = 0; j < fitnesses.size(); ++j) {
        ++r.comparisons;
        const bool replaces = which == Extreme::best ? fitnesses[j] < fitnesses[r.index]
                                                     : fitnesses[j] > fitnesses[r.index];
        if (replaces) {
            r.index = j;
            ++r.assignments;
        }
    }
    return r;
}

ScanResult find_extreme(const Population& pop, Extreme which)
{
    JAYALAB_EXPECTS(!pop.empty(), "find_extreme: empty population");
    ScanResult r{0, 0, 1};
    for (std::size_t j = 0; j < pop.size(); ++j) {
        ++r.comparisons;
        const double f = pop[j].fitness;
        const double cur = pop[r.index].fitness;
        if (which == Extreme::best ? f < cur : f > cur) {
            r.index = j;
            ++r.assignments;
        }
    }
    return r;
}

Population init_population(const ProblemSpec& spec, std::size_t n, RngStream& rng)
{
    if (n == 0)
        throw ConfigError("population size must be at least 1");
    spec.validate();

    Population pop;
    pop.members.resize(n);
    for (auto& m : pop.members) {
        m.genes.resize(spec.dimension);
        for (std::size_t j = 0; j < spec.dimension; ++j)
            m.genes[j] = rng.uniform(spec.lower[j], spec.upper[j]);
        // Rounding in lo + (hi-lo)*u can land one ulp outside the box.
        clamp_to_bounds(m.genes, spec);
        m.fitness = spec.evaluate(m.genes);
    }
    refresh_extremes(pop);
    return pop;
}

void refresh_extremes(Population& pop)
{
    pop.best_index = find_extreme(pop, Extreme::best).index;
    pop.worst_index = find_extreme(pop, Extreme::worst).index;
}

void clamp_to_bounds(std::span<double> genes, const ProblemSpec& spec)
{
    for (std::size_t j = 0; j < genes.size(); ++j)
        genes[j] = std::min(std::max(genes[j], spec.lower[j]), spec.upper[j]);
}

} // namespace jayalab
