#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "jayalab/population.hpp"
#include "jayalab/rng.hpp"

namespace jayalab {

enum class Algorithm { jaya, sjaya };

std::string_view algorithm_name(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

struct RunConfig {
    Algorithm algorithm = Algorithm::sjaya;
    ProblemSpec problem;
    std::size_t population_size = 0;
    std::size_t generations = 0;
    std::uint64_t seed = 0;

    void validate() const;
};

// Event counts for one generation.
//
// For SJaya, worst_recomputations is the number of full worst re-scans
// triggered by replacing the tracked worst member, best_updates the number
// of bestIndex moves, and worst_encounters/worst_replacements count the
// sweep reaching worstIndex and the candidate being accepted there.
//
// Jaya scans once per generation by construction: worst_recomputations is
// always 1, best_updates always 0, and the encounter counters refer to the
// worstIndex fixed at generation start.
struct CounterRecord {
    std::size_t generation = 0; // 1-based
    std::size_t worst_recomputations = 0;
    std::size_t best_updates = 0;
    std::size_t replacements = 0;
    std::size_t worst_encounters = 0;
    std::size_t worst_replacements = 0;
    // Totals over every find_extreme call made during the generation.
    std::size_t scan_comparisons = 0;
    std::size_t scan_assignments = 0;
};

// worstIndex before a worst replacement, and the index the re-scan returned.
struct WorstTransition {
    std::size_t from = 0;
    std::size_t to = 0;
};

struct RunTrace {
    std::vector<CounterRecord> generations;
    Population final_population;
    // Best fitness at the end of each generation.
    std::vector<double> best_fitness;
    std::size_t initial_worst_index = 0;
    std::vector<WorstTransition> worst_transitions;
};

// One candidate construction, reported before the acceptance test result is
// applied to the population.
struct CandidateEvent {
    std::size_t slot;
    std::size_t best_index;
    std::size_t worst_index;
    const Individual& candidate;
    bool accepted;
};

struct GenerationHooks {
    std::function<void(const CandidateEvent&)> on_candidate;
    // SJaya only: receives every worst re-scan.
    std::vector<WorstTransition>* worst_transitions = nullptr;
};

// Jaya move: x' = x + r1 (best - |x|) - r2 (worst - |x|), clamped to the
// box, then evaluated.
Individual make_candidate(const Individual& current, const Individual& best,
                          const Individual& worst, std::span<const double> r1,
                          std::span<const double> r2, const ProblemSpec& spec);

// r1 then r2, each d uniform draws. Both algorithms consume the stream in
// exactly this order once per generation.
void draw_move_parameters(RngStream& rng, std::size_t d, std::vector<double>& r1,
                          std::vector<double>& r2);

// Standard Jaya: scan for best and worst, then sweep all slots with those
// indices fixed. A candidate replaces its slot when its fitness is <= the
// incumbent's.
CounterRecord jaya_generation(Population& pop, RngStream& rng, const ProblemSpec& spec,
                              std::size_t generation, const GenerationHooks& hooks = {});

// Semi-steady-state Jaya. Requires pop.best_index/worst_index to be exact
// on entry and keeps them exact: bestIndex moves whenever an accepted
// candidate is strictly better than the tracked best; replacing the tracked
// worst always triggers a full re-scan.
CounterRecord sjaya_generation(Population& pop, RngStream& rng, const ProblemSpec& spec,
                               std::size_t generation, const GenerationHooks& hooks = {});

RunTrace run(const RunConfig& config);
RunTrace run(const RunConfig& config, RngStream& rng);

// One CSV row per generation:
// run_id,generation,worst_recomputations,best_updates,replacements,
// worst_encounters,worst_replacements,best_fitness
void write_trace_csv_header(std::ostream& os);
void write_trace_csv(std::ostream& os, const RunTrace& trace, std::size_t run_id);

} // namespace jayalab
