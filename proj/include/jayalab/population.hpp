#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "jayalab/rng.hpp"

namespace jayalab {

struct Bounds {
    double lower;
    double upper;
};

using Objective = std::function<double(std::span<const double>)>;

// A box-constrained minimization problem.
struct ProblemSpec {
    std::string name;
    std::size_t dimension = 0;
    // Per-coordinate box, stored as two parallel arrays so kernels can
    // stream them.
    std::vector<double> lower;
    std::vector<double> upper;
    Objective objective;
    double known_optimum = 0.0;
    std::string optimizer_location;
    // Exact minimizer when one point is representative; empty otherwise.
    std::vector<double> optimizer;

    Bounds bounds(std::size_t i) const { return {lower[i], upper[i]}; }

    double evaluate(std::span<const double> genes) const;

    // Throws ConfigError on a malformed spec (dimension mismatch,
    // lower > upper, non-finite bounds, missing objective).
    void validate() const;
};

struct Individual {
    std::vector<double> genes;
    double fitness = 0.0;
};

// Members plus the tracked extreme positions. Indices are 0-based array
// positions; the sweep visits them in ascending order.
struct Population {
    std::vector<Individual> members;
    std::size_t best_index = 0;
    std::size_t worst_index = 0;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }
    const Individual& operator[](std::size_t i) const { return members[i]; }
    Individual& operator[](std::size_t i) { return members[i]; }
    const Individual& best() const { return members[best_index]; }
    const Individual& worst() const { return members[worst_index]; }

    std::vector<double> fitnesses() const;
};

enum class Extreme { best, worst };

// Outcome of one instrumented linear scan.
struct ScanResult {
    std::size_t index = 0;
    std::size_t comparisons = 0;
    std::size_t assignments = 0;
};

// Linear scan for the lowest (best) or highest (worst) fitness. The first
// element seeds the running extreme and counts as one assignment; every
// element, including the first, costs one comparison, so comparisons == n.
// Ties keep the earlier index.
ScanResult find_extreme(std::span<const double> fitnesses, Extreme which);
ScanResult find_extreme(const Population& pop, Extreme which);

// Genes drawn independently and uniformly within bounds, member by member
// and coordinate by coordinate, then evaluated; extremes set by full scans.
Population init_population(const ProblemSpec& spec, std::size_t n, RngStream& rng);

// Re-derives best_index/worst_index from scratch.
void refresh_extremes(Population& pop);

// Clamps every gene into the spec's box.
void clamp_to_bounds(std::span<double> genes, const ProblemSpec& spec);

} // namespace jayalab
