#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jayalab/distributions.hpp"

namespace jayalab {

// Worst-index process: each time the sweep reaches the tracked worst it is
// replaced with probability p; the re-scan lands uniformly on 1..n.
struct WorstModelParams {
    std::size_t n = 1;
    double p = 1.0;

    void validate() const;
};

// P(X = m | W0 = k; n): the number of worst re-scans in one generation
// when the sweep meets the worst at position k (k counted in sweep order
// from the end of the sweep, so k = 1 is the last slot visited).
//   m = 0       -> 1 - p
//   1 <= m <= k -> (p/n)^m (n + p - p k / m) prod_{j=1}^{m-1} (k - j) / (m-1)!
//   m > k       -> 0
// The product is accumulated term by term, so large n does not overflow.
double worst_update_pmf(std::size_t m, std::size_t k, const WorstModelParams& params);

// pmf for m = 0..k in one pass; tail terms below 1e-18 of the running mass
// are left at zero.
std::vector<double> worst_update_pmf_row(std::size_t k, const WorstModelParams& params);

// E(X | W0 = k; n) = sum_m m P(X = m | k).
double worst_update_expectation_given_k(std::size_t k, const WorstModelParams& params);

// E(X | n) with W0 uniform on 1..n.
double worst_update_expectation(const WorstModelParams& params);

// E(Y_g) = sum_{i=1}^{n} P(x > E(max of g n + i - 1 draws)), the expected
// number of best-index moves in generation g >= 1.
double best_update_expectation(const Distribution& dist, std::size_t n, std::size_t g);

// lim_{n->inf} E(Y_1): ln 2 (uniform), e^-gamma ln 2 (exponential,
// logistic); nullopt for normal, which has no closed-form limit.
std::optional<double> best_update_limit(const Distribution& dist);

// sup_n E(Y_1): ln 2 (uniform), e^-gamma ln 2 (exponential), 1/2 (normal,
// logistic).
double best_update_upper_bound(const Distribution& dist);

} // namespace jayalab
