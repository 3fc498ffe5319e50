#include "jayalab/optimizers.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>
#include <utility>

#include "jayalab/errors.hpp"
#include "jayalab/kernels.hpp"

namespace jayalab {

std::string_view algorithm_name(Algorithm a)
{
    return a == Algorithm::jaya ? "jaya" : "sjaya";
}

Algorithm parse_algorithm(std::string_view name)
{
    if (name == "jaya")
        return Algorithm::jaya;
    if (name == "sjaya")
        return Algorithm::sjaya;
    throw ConfigError("unknown algorithm '" + std::string(name) + "' (expected jaya|sjaya)");
}

void RunConfig::validate() const
{
    if (population_size == 0)
        throw ConfigError("population size must be at least 1");
    if (generations == 0)
        throw ConfigError("generation count must be at least 1");
    problem.validate();
}

namespace {

void build_candidate(const Individual& current, const Individual& best, const Individual& worst,
                     std::span<const double> r1, std::span<const double> r2,
                     const ProblemSpec& spec, Individual& out)
{
    out.genes.resize(spec.dimension);
    simd::jaya_update(current.genes, best.genes, worst.genes, r1, r2, spec.lower, spec.upper,
                      out.genes);
    out.fitness = spec.evaluate(out.genes);
}

void add_scan(CounterRecord& rec, const ScanResult& scan)
{
    rec.scan_comparisons += scan.comparisons;
    rec.scan_assignments += scan.assignments;
}

} // namespace

Individual make_candidate(const Individual& current, const Individual& best,
                          const Individual& worst, std::span<const double> r1,
                          std::span<const double> r2, const ProblemSpec& spec)
{
    const std::size_t d = spec.dimension;
    JAYALAB_EXPECTS(current.genes.size() == d && best.genes.size() == d && worst.genes.size() == d,
                    "make_candidate: parent dimension mismatch");
    JAYALAB_EXPECTS(r1.size() == d && r2.size() == d, "make_candidate: parameter length mismatch");
    Individual out;
    build_candidate(current, best, worst, r1, r2, spec, out);
    return out;
}

void draw_move_parameters(RngStream& rng, std::size_t d, std::vector<double>& r1,
                          std::vector<double>& r2)
{
    r1.resize(d);
    r2.resize(d);
    for (auto& v : r1)
        v = rng.uniform01();
    for (auto& v : r2)
        v = rng.uniform01();
}

CounterRecord jaya_generation(Population& pop, RngStream& rng, const ProblemSpec& spec,
                              std::size_t generation, const GenerationHooks& hooks)
{
    JAYALAB_EXPECTS(!pop.empty(), "jaya_generation: empty population");
    CounterRecord rec;
    rec.generation = generation;

    const ScanResult best = find_extreme(pop, Extreme::best);
    const ScanResult worst = find_extreme(pop, Extreme::worst);
    add_scan(rec, best);
    add_scan(rec, worst);
    pop.best_index = best.index;
    pop.worst_index = worst.index;
    rec.worst_recomputations = 1;

    std::vector<double> r1, r2;
    draw_move_parameters(rng, spec.dimension, r1, r2);

    Individual candidate;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        build_candidate(pop[i], pop.best(), pop.worst(), r1, r2, spec, candidate);
        const bool accepted = candidate.fitness <= pop[i].fitness;
        const bool at_worst = i == pop.worst_index;
        if (hooks.on_candidate)
            hooks.on_candidate({i, pop.best_index, pop.worst_index, candidate, accepted});
        if (at_worst)
            ++rec.worst_encounters;
        if (accepted) {
            std::swap(pop[i], candidate);
            ++rec.replacements;
            if (at_worst)
                ++rec.worst_replacements;
        }
    }
    return rec;
}

CounterRecord sjaya_generation(Population& pop, RngStream& rng, const ProblemSpec& spec,
                               std::size_t generation, const GenerationHooks& hooks)
{
    JAYALAB_EXPECTS(!pop.empty(), "sjaya_generation: empty population");
    JAYALAB_EXPECTS(pop.best_index < pop.size() && pop.worst_index < pop.size(),
                    "sjaya_generation: tracked indices out of range");
    CounterRecord rec;
    rec.generation = generation;

    std::vector<double> r1, r2;
    draw_move_parameters(rng, spec.dimension, r1, r2);

    Individual candidate;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        build_candidate(pop[i], pop.best(), pop.worst(), r1, r2, spec, candidate);
        const bool accepted = candidate.fitness <= pop[i].fitness;
        const bool at_worst = i == pop.worst_index;
        if (hooks.on_candidate)
            hooks.on_candidate({i, pop.best_index, pop.worst_index, candidate, accepted});
        if (at_worst)
            ++rec.worst_encounters;
        if (!accepted)
            continue;

        std::swap(pop[i], candidate);
        ++rec.replacements;
        if (pop[i].fitness < pop.best().fitness) {
            pop.best_index = i;
            ++rec.best_updates;
        }
        if (at_worst) {
            ++rec.worst_replacements;
            const ScanResult scan = find_extreme(pop, Extreme::worst);
            add_scan(rec, scan);
            ++rec.worst_recomputations;
            if (hooks.worst_transitions)
                hooks.worst_transitions->push_back({i, scan.index});
            pop.worst_index = scan.index;
        }
    }
    return rec;
}

RunTrace run(const RunConfig& config)
{
    RngStream rng(config.seed, 0);
    return run(config, rng);
}

RunTrace run(const RunConfig& config, RngStream& rng)
{
    config.validate();
    const ProblemSpec& spec = config.problem;

    RunTrace trace;
    trace.generations.reserve(config.generations);
    trace.best_fitness.reserve(config.generations);

    Population pop = init_population(spec, config.population_size, rng);
    trace.initial_worst_index = pop.worst_index;

    GenerationHooks hooks;
    hooks.worst_transitions = &trace.worst_transitions;

    for (std::size_t g = 1; g <= config.generations; ++g) {
        if (config.algorithm == Algorithm::jaya) {
            trace.generations.push_back(jaya_generation(pop, rng, spec, g, hooks));
            double best = std::numeric_limits<double>::infinity();
            for (const auto& m : pop.members)
                best = std::min(best, m.fitness);
            trace.best_fitness.push_back(best);
        } else {
            trace.generations.push_back(sjaya_generation(pop, rng, spec, g, hooks));
            trace.best_fitness.push_back(pop.best().fitness);
        }
    }
    if (config.algorithm == Algorithm::jaya)
        refresh_extremes(pop);
    trace.final_population = std::move(pop);
    return trace;
}

void write_trace_csv_header(std::ostream& os)
{
    os << "run_id,generation,worst_recomputations,best_updates,replacements,"
          "worst_encounters,worst_replacements,best_fitness\n";
}

void write_trace_csv(std::ostream& os, const RunTrace& trace, std::size_t run_id)
{
    const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t g = 0; g < trace.generations.size(); ++g) {
        const auto& r = trace.generations[g];
        os << run_id << ',' << r.generation << ',' << r.worst_recomputations << ','
           << r.best_updates << ',' << r.replacements << ',' << r.worst_encounters << ','
           << r.worst_replacements << ',' << trace.best_fitness[g] << '\n';
    }
    os.precision(old_precision);
}

} // namespace jayalab
