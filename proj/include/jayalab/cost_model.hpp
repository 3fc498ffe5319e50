#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "jayalab/distributions.hpp"

namespace jayalab {

// Abstract unit costs. All values are unitless and non-negative.
struct CostConstants {
    double comparison = 1.0;     // C_c
    double assignment = 1.0;     // C_a
    double param_setup = 1.0;    // C_p, per dimension
    double candidate_op = 1.0;   // C_op, per dimension
    // phi(d): cost of one objective evaluation in d dimensions.
    std::function<double(std::size_t)> evaluation = [](std::size_t d) { return static_cast<double>(d); };

    void validate() const;
};

struct CostTerm {
    std::string label;
    double value;
};

struct CostBreakdown {
    std::vector<CostTerm> terms;
    double total = 0.0;
};

// n * integral F f dx, evaluated by quadrature over the distribution's
// support. Equals n/2 for every continuous F.
double expected_comparisons(const Distribution& dist, std::size_t n);

// integral F(x) f(x) dx alone.
double cdf_pdf_integral(const Distribution& dist);

struct NaiveScanCosts {
    std::size_t comparisons;
    double expected_assignments; // H_n
};

NaiveScanCosts naive_scan_costs(std::size_t n);

struct RunCostInputs {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t generations = 0;
    Distribution dist = Distribution::uniform();
    CostConstants costs;
};

// n phi + 2 (n C_c + H_n C_a) + G [C_p d + n (C_op d + phi) + n C_c
//   + E(comp) C_a + E(comp) C_c + E(assign) C_a + E(comp) C_c
//   + worst_rescans (n C_c + H_n C_a)]
// expected_assign is the per-generation best-update expectation the
// caller wants to charge (a generation-specific E(Y_g) or an average).
CostBreakdown sjaya_run_cost(const RunCostInputs& in, double expected_assign,
                             double worst_rescans = 1.7);

// n phi + G [2 (n C_c + H_n C_a) + C_p d + n (C_op d + phi) + n C_c + E(comp) C_a]
CostBreakdown jaya_run_cost(const RunCostInputs& in);

struct AdditionalCostBound {
    double exact;   // (n/2)(2 C_a + C_c) - 0.3 (n C_c + H_n C_a)
    double large_n; // (n - 0.3 ln n - 0.3 gamma) C_a + 0.2 n C_c
};

// Upper estimate of SJaya's extra per-generation cost over Jaya.
AdditionalCostBound additional_cost_bound(std::size_t n, const CostConstants& costs);

} // namespace jayalab
