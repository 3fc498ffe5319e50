#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "jayalab/benchmarks.hpp"
#include "jayalab/errors.hpp"
#include "jayalab/experiments.hpp"
#include "jayalab/models.hpp"

using namespace jayalab;

namespace {

EnsembleConfig ensemble(const std::string& fn, std::size_t n, std::size_t runs, std::uint64_t seed,
                        std::size_t jobs = 1, std::size_t generations = 20)
{
    EnsembleConfig c;
    c.run.algorithm = Algorithm::sjaya;
    c.run.problem = benchmark(fn);
    c.run.population_size = n;
    c.run.generations = generations;
    c.runs = runs;
    c.master_seed = seed;
    c.jobs = jobs;
    return c;
}

} // namespace

TEST(Oracle, DegenerateCases)
{
    RngStream rng(1, 0);
    for (int t = 0; t < 1000; ++t) {
        EXPECT_EQ(oracle_worst_process(7, {10, 0.0}, rng), 0u);
        EXPECT_EQ(oracle_worst_process(1, {10, 1.0}, rng), 1u);
    }
}

TEST(Oracle, MeanMatchesClosedForm)
{
    const WorstModelParams prm{10, 1.0};
    constexpr std::size_t trials = 1000000;
    RngStream rng(2, 0);
    double s = 0.0, s2 = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const double x = static_cast<double>(oracle_worst_process(10, prm, rng));
        s += x;
        s2 += x * x;
    }
    const double mean = s / trials;
    const double se = std::sqrt((s2 / trials - mean * mean) / trials);
    EXPECT_NEAR(mean, worst_update_expectation_given_k(10, prm), 3 * se);
}

TEST(Oracle, PmfWithinBinomialBand)
{
    const WorstModelParams prm{10, 0.5};
    constexpr std::size_t trials = 1000000;
    const auto est = oracle_pmf_estimate(5, prm, trials, 3);
    ASSERT_EQ(est.size(), 6u);
    for (std::size_t m = 0; m < est.size(); ++m) {
        const double exact = worst_update_pmf(m, 5, prm);
        const double band = 4 * std::sqrt(std::max(est[m] * (1 - est[m]), 1.0 / trials) / trials);
        EXPECT_NEAR(est[m], exact, band) << m;
    }
}

TEST(Oracle, PmfEdgeCases)
{
    EXPECT_EQ(oracle_pmf_estimate(4, {10, 1.0}, 20000, 5)[0], 0.0);
    const auto one = oracle_pmf_estimate(4, {10, 0.6}, 1, 5);
    EXPECT_EQ(std::accumulate(one.begin(), one.end(), 0.0), 1.0);
    EXPECT_EQ(std::count(one.begin(), one.end(), 1.0), 1);
}

TEST(Ensemble, DeterministicAndIndependentOfJobs)
{
    const EnsembleReport a = run_ensemble(ensemble("rosenbrock", 10, 24, 5, 1));
    const EnsembleReport b = run_ensemble(ensemble("rosenbrock", 10, 24, 5, 1));
    const EnsembleReport c = run_ensemble(ensemble("rosenbrock", 10, 24, 5, 3));
    for (const auto* r : {&b, &c}) {
        EXPECT_EQ(a.empirical_p, r->empirical_p);
        EXPECT_EQ(a.empirical_E_X, r->empirical_E_X);
        EXPECT_EQ(a.theoretical_E_X, r->theoretical_E_X);
        EXPECT_EQ(a.empirical_E_Y_by_generation, r->empirical_E_Y_by_generation);
        EXPECT_EQ(a.mean_replacements, r->mean_replacements);
    }
}

TEST(Ensemble, SingleRunTwiceIdentical)
{
    const EnsembleReport a = run_ensemble(ensemble("ackley", 10, 1, 8));
    const EnsembleReport b = run_ensemble(ensemble("ackley", 10, 1, 8));
    EXPECT_EQ(a.empirical_E_Y_by_generation, b.empirical_E_Y_by_generation);
    EXPECT_EQ(a.empirical_E_X, b.empirical_E_X);
}

TEST(Ensemble, TheoreticalFollowsMeasuredP)
{
    const EnsembleReport r = run_ensemble(ensemble("chung_reynolds", 10, 50, 9));
    ASSERT_TRUE(r.empirical_p && r.theoretical_E_X);
    EXPECT_DOUBLE_EQ(*r.theoretical_E_X, worst_update_expectation({10, *r.empirical_p}));
    EXPECT_EQ(r.below_theory_flag, *r.empirical_E_X < *r.theoretical_E_X);
}

TEST(Ensemble, TracesMatchReport)
{
    std::vector<RunTrace> traces;
    const EnsembleReport r = run_ensemble(ensemble("step", 10, 6, 10), traces);
    ASSERT_EQ(traces.size(), 6u);
    double x = 0.0;
    for (const auto& t : traces)
        for (const auto& g : t.generations)
            x += static_cast<double>(g.worst_recomputations);
    EXPECT_NEAR(*r.empirical_E_X, x / (6.0 * 20.0), 1e-12);
}

TEST(Ensemble, JayaHasNoWorstStatistics)
{
    EnsembleConfig c = ensemble("ackley", 10, 3, 1);
    c.run.algorithm = Algorithm::jaya;
    const EnsembleReport r = run_ensemble(c);
    EXPECT_FALSE(r.empirical_p.has_value());
    EXPECT_FALSE(r.empirical_E_X.has_value());
}

TEST(Ensemble, GoldsteinPriceBestUpdates)
{
    const EnsembleReport r = run_ensemble(ensemble("goldstein_price", 10, 500, 11));
    EXPECT_NEAR(r.empirical_E_Y_by_generation.front(), 0.600, 0.1);
    EXPECT_NEAR(r.empirical_E_Y_by_generation.back(), 0.076, 0.1);
}

TEST(Ensemble, InvalidConfig)
{
    EXPECT_THROW(run_ensemble(ensemble("ackley", 10, 0, 1)), ConfigError);
}

TEST(Transition, RowsAreProbabilityVectors)
{
    EnsembleConfig c = ensemble("chung_reynolds", 10, 300, 12, 1, 10);
    c.run.problem = benchmark("chung_reynolds", 10);
    const TransitionEstimate est = estimate_transition_matrix(c);
    ASSERT_EQ(est.matrix.size(), 10u);
    for (std::size_t k = 0; k < 10; ++k) {
        if (est.row_counts[k] == 0)
            continue;
        double s = 0.0;
        for (double v : est.matrix[k]) {
            EXPECT_GE(v, 0.0);
            s += v;
        }
        EXPECT_NEAR(s, 1.0, 1e-9);
    }
    EXPECT_NEAR(std::accumulate(est.initial_distribution.begin(), est.initial_distribution.end(), 0.0), 1.0,
                1e-12);
}

TEST(Transition, SweepLabels)
{
    EXPECT_EQ(sweep_label(0, 10), 10u);
    EXPECT_EQ(sweep_label(9, 10), 1u);
}

TEST(Transition, RowSidesOnHandMatrix)
{
    TransitionEstimate est;
    est.n = 3;
    // Rows by current label 1..3, columns next label 1..3.
    est.matrix = {{0.5, 0.3, 0.2}, {0.6, 0.2, 0.2}, {0.1, 0.1, 0.8}};
    est.row_counts = {1, 1, 1};
    est.initial_distribution = {1.0 / 3, 1.0 / 3, 1.0 / 3};
    const auto sides = compare_row_sides(est);
    ASSERT_EQ(sides.size(), 3u);
    EXPECT_FALSE(sides[0].pending_mean.has_value());
    EXPECT_FALSE(sides[0].holds);
    EXPECT_NEAR(*sides[1].pending_mean, 0.6, 1e-15);
    EXPECT_NEAR(sides[1].visited_mean, 0.2, 1e-15);
    EXPECT_TRUE(sides[1].holds);
    EXPECT_NEAR(*sides[2].pending_mean, 0.1, 1e-15);
    EXPECT_NEAR(sides[2].visited_mean, 0.8, 1e-15);
    EXPECT_FALSE(sides[2].holds);
}

TEST(TrendCheck, Examples)
{
    // Goldstein-Price n=100 shape: start, middle, end values from the reference row.
    std::vector<double> gp(20);
    for (std::size_t g = 0; g < 20; ++g)
        gp[g] = 0.620 * std::exp(-0.26 * static_cast<double>(g));
    gp[9] = 0.142;
    gp[19] = 0.009;
    EXPECT_TRUE(best_update_trend_check(gp).passed);
    EXPECT_FALSE(best_update_trend_check(std::vector<double>(20, 0.3)).passed);
    std::vector<double> up(20);
    std::iota(up.begin(), up.end(), 0.0);
    EXPECT_FALSE(best_update_trend_check(up).passed);
    EXPECT_FALSE(best_update_trend_check({0.5}).passed);
}
