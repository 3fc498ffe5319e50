#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jayalab/models.hpp"
#include "jayalab/optimizers.hpp"
#include "jayalab/rng.hpp"

namespace jayalab {

// ---------------------------------------------------------------------------
// Abstract worst-index process

// Simulates one generation of the worst-index process under the model's
// assumptions and returns the number of re-scans. Position k counts from
// the end of the sweep (k = 1 is visited last): each visit replaces the
// worst with probability p; a re-scan draws j uniform on 1..n and the
// process ends unless j < current position.
std::size_t oracle_worst_process(std::size_t k, const WorstModelParams& params, RngStream& rng);

// Relative frequencies of oracle outcomes m = 0..k over `trials` runs.
std::vector<double> oracle_pmf_estimate(std::size_t k, const WorstModelParams& params,
                                        std::size_t trials, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Optimizer ensembles

struct EnsembleConfig {
    RunConfig run;            // template; its seed is ignored
    std::size_t runs = 1;
    std::uint64_t master_seed = 0;
    std::size_t jobs = 1;     // worker threads; 0 = hardware concurrency

    void validate() const;
};

struct EnsembleReport {
    Algorithm algorithm = Algorithm::sjaya;
    std::string problem;
    std::size_t runs = 0;
    std::size_t n = 0;
    std::size_t generations = 0;

    // SJaya only (nullopt for Jaya). empirical_p averages per-run relative
    // frequencies; runs that never met the tracked worst contribute nothing
    // and are counted in runs_without_encounters.
    std::optional<double> empirical_p;
    std::optional<double> empirical_E_X;
    std::optional<double> theoretical_E_X;
    std::size_t runs_without_encounters = 0;

    // Mean best-index moves per generation, index g-1.
    std::vector<double> empirical_E_Y_by_generation;
    double empirical_E_Y_mean = 0.0;

    // Mean accepted replacements per generation per run.
    double mean_replacements = 0.0;

    // Set when empirical_E_X < theoretical_E_X; the usual observation is
    // the opposite ordering.
    bool below_theory_flag = false;
};

// Runs `runs` independent seeded runs (run i uses stream (master_seed, i))
// and aggregates them in run order.
EnsembleReport run_ensemble(const EnsembleConfig& config);

// Same, also handing back every trace (in run order).
EnsembleReport run_ensemble(const EnsembleConfig& config, std::vector<RunTrace>& traces);

// Slot labels number positions in sweep order from the end: with n slots,
// label n is the first slot visited in a generation and label 1 the last
// (array position i has label n - i).
inline std::size_t sweep_label(std::size_t position, std::size_t n) { return n - position; }

struct TransitionEstimate {
    std::size_t n = 0;
    // matrix[k-1][j-1] = P(next worst label j | current worst label k).
    std::vector<std::vector<double>> matrix;
    std::vector<std::size_t> row_counts;
    // Histogram of the worst label right after initialization.
    std::vector<double> initial_distribution;
    std::size_t runs = 0;
};

// Tallies every worst re-scan (label before -> label returned) over an
// SJaya ensemble.
TransitionEstimate estimate_transition_matrix(const EnsembleConfig& config);

struct RowSideComparison {
    std::size_t label;
    // Labels >= k (already visited this generation, diagonal included).
    double visited_mean;
    // Labels < k (still to be visited); nullopt for label 1.
    std::optional<double> pending_mean;
    bool holds; // pending_mean >= visited_mean
};

std::vector<RowSideComparison> compare_row_sides(const TransitionEstimate& est);

struct TrendCheck {
    bool passed = false;
    double slope = 0.0;
    double first = 0.0;
    double last = 0.0;
    std::string diagnostics;
};

// Trend test on a per-generation best-update series: passes when the
// least-squares slope is negative and the first value exceeds the last.
TrendCheck best_update_trend_check(const std::vector<double>& series);
TrendCheck theorem2_empirical_check(const EnsembleReport& report);

} // namespace jayalab
