#include <gtest/gtest.h>

#include <cmath>

#include "jayalab/cost_model.hpp"
#include "jayalab/errors.hpp"
#include "jayalab/harmonic.hpp"

using namespace jayalab;

namespace {

double h(std::size_t n)
{
    double s = 0.0;
    for (std::size_t j = 1; j <= n; ++j)
        s += 1.0 / static_cast<double>(j);
    return s;
}

CostConstants zero_costs()
{
    CostConstants c;
    c.comparison = c.assignment = c.param_setup = c.candidate_op = 0.0;
    c.evaluation = [](std::size_t) { return 0.0; };
    return c;
}

RunCostInputs inputs(std::size_t n, std::size_t d, std::size_t g, CostConstants c = {})
{
    RunCostInputs in;
    in.n = n;
    in.d = d;
    in.generations = g;
    in.dist = Distribution::uniform();
    in.costs = std::move(c);
    return in;
}

} // namespace

TEST(CostModel, CdfPdfIntegralIsHalf)
{
    for (const auto& d : {Distribution::uniform(), Distribution::uniform(-4, 9), Distribution::exponential(),
                          Distribution::exponential(0.2), Distribution::normal(), Distribution::normal(5, 3),
                          Distribution::logistic()})
        EXPECT_NEAR(cdf_pdf_integral(d), 0.5, 1e-8) << d.describe();
}

TEST(CostModel, ExpectedComparisons)
{
    EXPECT_NEAR(expected_comparisons(Distribution::uniform(), 10), 5.0, 1e-8);
    EXPECT_NEAR(expected_comparisons(Distribution::exponential(), 7), 3.5, 1e-8);
    EXPECT_NEAR(expected_comparisons(Distribution::normal(), 100), 50.0, 1e-8);
}

TEST(CostModel, NaiveScan)
{
    EXPECT_EQ(naive_scan_costs(1).comparisons, 1u);
    EXPECT_EQ(naive_scan_costs(1).expected_assignments, 1.0);
    EXPECT_EQ(naive_scan_costs(4).comparisons, 4u);
    EXPECT_NEAR(naive_scan_costs(4).expected_assignments, 25.0 / 12.0, 1e-15);
    EXPECT_NEAR(naive_scan_costs(100).expected_assignments, 5.18737751763962, 1e-13);
}

TEST(CostModel, ZeroCostsGiveZero)
{
    EXPECT_EQ(sjaya_run_cost(inputs(50, 10, 20, zero_costs()), 0.4).total, 0.0);
    EXPECT_EQ(jaya_run_cost(inputs(50, 10, 20, zero_costs())).total, 0.0);
}

TEST(CostModel, ZeroGenerations)
{
    const std::size_t n = 30, d = 7;
    const double init = static_cast<double>(n * d) + 2.0 * (static_cast<double>(n) + h(n));
    EXPECT_NEAR(sjaya_run_cost(inputs(n, d, 0), 0.5).total, init, 1e-10);
    EXPECT_NEAR(jaya_run_cost(inputs(n, d, 0)).total, static_cast<double>(n * d), 1e-10);
}

TEST(CostModel, HandExpandedSJaya)
{
    // n=100, d=30, G=20, unit costs, phi(d)=d, E(#assign)=0.6907, E(#comp)=50.
    const double n = 100, d = 30, G = 20, assign = 0.6907, comp = 50.0, H = h(100);
    double expected = n * d;              // initial evaluation
    expected += 2 * (n + H);              // initial scans
    expected += G * d;                    // parameter setup
    expected += G * n * (d + d);          // candidate creation
    expected += G * n;                    // acceptance tests
    expected += G * comp;                 // replacements
    expected += G * comp;                 // best-update tests
    expected += G * assign;               // best-index updates
    expected += G * comp;                 // worst-index tests
    expected += G * 1.7 * (n + H);        // worst re-scans
    const CostBreakdown b = sjaya_run_cost(inputs(100, 30, 20), 0.6907);
    EXPECT_NEAR(b.total, expected, 1e-7);
    double sum = 0.0;
    for (const auto& t : b.terms)
        sum += t.value;
    EXPECT_NEAR(sum, b.total, 1e-9);
}

TEST(CostModel, HandExpandedJaya)
{
    const double n = 100, d = 30, G = 20, comp = 50.0, H = h(100);
    const double expected = n * d + G * (2 * (n + H) + d + n * (d + d) + n + comp);
    EXPECT_NEAR(jaya_run_cost(inputs(100, 30, 20)).total, expected, 1e-7);
}

TEST(CostModel, MonotoneInEveryInput)
{
    const double base_s = sjaya_run_cost(inputs(40, 10, 10), 0.5).total;
    const double base_j = jaya_run_cost(inputs(40, 10, 10)).total;
    for (int which = 0; which < 7; ++which) {
        RunCostInputs in = inputs(40, 10, 10);
        switch (which) {
        case 0: in.n = 41; break;
        case 1: in.d = 11; break;
        case 2: in.generations = 11; break;
        case 3: in.costs.comparison = 1.5; break;
        case 4: in.costs.assignment = 1.5; break;
        case 5: in.costs.param_setup = 1.5; break;
        case 6: in.costs.candidate_op = 1.5; break;
        }
        EXPECT_GE(sjaya_run_cost(in, 0.5).total, base_s) << which;
        EXPECT_GE(jaya_run_cost(in).total, base_j) << which;
    }
}

TEST(CostModel, AdditionalBoundExamples)
{
    CostConstants unit;
    EXPECT_NEAR(additional_cost_bound(100, unit).exact, 150.0 - 0.3 * (100.0 + h(100)), 1e-10);
    EXPECT_NEAR(additional_cost_bound(100, unit).exact, 118.44, 0.005);
    EXPECT_EQ(additional_cost_bound(100, zero_costs()).exact, 0.0);
    EXPECT_EQ(additional_cost_bound(100, zero_costs()).large_n, 0.0);
    EXPECT_NEAR(additional_cost_bound(1000, unit).large_n, 1000.0 - 0.3 * std::log(1000.0) - 0.17316 + 200.0,
                1e-5);
}

TEST(CostModel, AdditionalBoundFormsAgreeForLargeN)
{
    for (double ca : {0.5, 1.0, 3.0}) {
        for (double cc : {0.5, 1.0, 3.0}) {
            CostConstants c;
            c.assignment = ca;
            c.comparison = cc;
            for (std::size_t n : {100u, 250u, 1000u, 10000u}) {
                const auto b = additional_cost_bound(n, c);
                EXPECT_NEAR(b.large_n, b.exact, 0.01 * b.exact) << n;
            }
        }
    }
}

TEST(CostModel, BoundDominatesExtraCostWhenAssignmentCostsAtLeastComparison)
{
    // Per-generation SJaya minus Jaya with #assign at its upper bound #comp.
    for (double ca : {1.0, 2.0, 5.0}) {
        for (double cc : {0.25, 1.0}) {
            if (ca < cc)
                continue;
            for (std::size_t n : {5u, 20u, 100u, 1000u}) {
                CostConstants c;
                c.assignment = ca;
                c.comparison = cc;
                RunCostInputs in = inputs(n, 10, 1, c);
                const double comp = expected_comparisons(in.dist, n);
                const double scan = static_cast<double>(n) * cc + h(n) * ca;
                const double extra = sjaya_run_cost(in, comp).total - 2 * scan - jaya_run_cost(in).total;
                EXPECT_LE(extra, additional_cost_bound(n, c).exact + 1e-9) << ca << ' ' << cc << ' ' << n;
            }
        }
    }
}

TEST(CostModel, BoundCanFallShortWhenComparisonCostsMore)
{
    CostConstants c;
    c.assignment = 1.0;
    c.comparison = 4.0;
    RunCostInputs in = inputs(100, 10, 1, c);
    const double comp = expected_comparisons(in.dist, 100);
    const double scan = 100.0 * 4.0 + h(100);
    const double extra = sjaya_run_cost(in, comp).total - 2 * scan - jaya_run_cost(in).total;
    EXPECT_GT(extra, additional_cost_bound(100, c).exact);
}

TEST(CostModel, Validation)
{
    CostConstants bad;
    bad.comparison = -1.0;
    EXPECT_THROW(bad.validate(), ConfigError);
    EXPECT_THROW(sjaya_run_cost(inputs(10, 2, 2), -0.1), ContractViolation);
}
