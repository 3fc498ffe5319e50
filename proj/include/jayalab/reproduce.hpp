#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jayalab/report.hpp"

// End-to-end pipelines that regenerate the published tables and compare
// them with the reference figures at fixed tolerances.

namespace jayalab {

inline constexpr std::uint64_t kDefaultSeed = 20230417;

namespace tolerance {
inline constexpr double max_worst_expectation = 1e-6;
inline constexpr double best_update_growth = 5e-5;
inline constexpr double ensemble_p = 0.02;
inline constexpr double ensemble_empirical_E_X = 0.15;
inline constexpr double ensemble_theoretical_E_X = 0.02;
inline constexpr double ensemble_E_Y_gen1 = 0.1;
inline constexpr std::size_t ensemble_E_Y_max_n = 100;
inline constexpr double row_sum = 1e-9;
inline constexpr double diagonal_low = 0.02;
inline constexpr double diagonal_high = 0.08;
inline constexpr std::size_t side_rows_required = 9;
inline constexpr double initial_low = 0.08;
inline constexpr double initial_high = 0.12;
} // namespace tolerance

struct Check {
    std::string name;
    bool passed = false;
    bool hard = true; // soft checks are reported but never fail a run
    std::string detail;
};

struct Reproduction {
    std::vector<Table> tables;
    std::vector<Check> checks;

    bool passed() const;
};

// E(X | n) at p = 1 for the twelve reference population sizes.
Reproduction reproduce_max_worst_expectation();

// E(Y_1; n, F) for the four distributions and seven population sizes,
// plus the n -> infinity limits.
Reproduction reproduce_best_update_growth();

enum class EnsembleTables { worst, best, both };

struct EnsembleOptions {
    std::size_t runs = 500;
    std::size_t generations = 20;
    std::uint64_t seed = kDefaultSeed;
    std::size_t jobs = 1;
    // Restrict to these population sizes (empty = all reference sizes).
    std::vector<std::size_t> sizes;
};

// SJaya ensembles per reference row: worst-index statistics (p, E(X)),
// best-index statistics by generation, or both from the same runs.
Reproduction reproduce_ensembles(const EnsembleOptions& options, EnsembleTables which);

struct TransitionOptions {
    std::size_t runs = 5000;
    std::size_t generations = 10;
    std::uint64_t seed = kDefaultSeed;
    std::size_t jobs = 1;
};

// Chung-Reynolds in 10 dimensions with n = 10. `with_matrix` adds the
// transition matrix and its checks; the initial-label histogram is always
// produced.
Reproduction reproduce_transition(const TransitionOptions& options, bool with_matrix);

// Checks for an arbitrary transition estimate (row sums, diagonal band,
// side ordering, initial histogram band).
std::vector<Check> transition_checks(const TransitionEstimate& est, bool with_matrix);

} // namespace jayalab
