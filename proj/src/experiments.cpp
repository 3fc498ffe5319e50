#include "jayalab/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>
#include <utility>

#include "jayalab/errors.hpp"

namespace jayalab {

std::size_t oracle_worst_process(std::size_t k, const WorstModelParams& params, RngStream& rng)
{
    params.validate();
    JAYALAB_EXPECTS(k >= 1 && k <= params.n, "oracle_worst_process: k outside [1, n]");
    std::size_t count = 0;
    std::size_t pos = k;
    while (true) {
        if (!rng.bernoulli(params.p))
            return count;
        ++count;
        const std::size_t j = 1 + static_cast<std::size_t>(rng.below(params.n));
        if (j >= pos)
            return count;
        pos = j;
    }
}

std::vector<double> oracle_pmf_estimate(std::size_t k, const WorstModelParams& params,
                                        std::size_t trials, std::uint64_t seed)
{
    JAYALAB_EXPECTS(trials >= 1, "oracle_pmf_estimate: trials must be at least 1");
    RngStream rng(seed, 0);
    std::vector<std::size_t> counts(k + 1, 0);
    for (std::size_t t = 0; t < trials; ++t)
        ++counts[oracle_worst_process(k, params, rng)];
    std::vector<double> freq(k + 1);
    for (std::size_t m = 0; m <= k; ++m)
        freq[m] = static_cast<double>(counts[m]) / static_cast<double>(trials);
    return freq;
}

void EnsembleConfig::validate() const
{
    if (runs == 0)
        throw ConfigError("ensemble needs at least one run");
    run.validate();
}

namespace {

// Runs every member of the ensemble, reducing each trace through `keep`
// as soon as it finishes. Results are stored by run index, so the output
// does not depend on scheduling.
template <typename Keep>
auto map_runs(const EnsembleConfig& config, Keep keep)
{
    using Result = decltype(keep(std::declval<RunTrace&&>()));
    config.validate();
    std::vector<Result> results(config.runs);
    std::size_t workers = config.jobs == 0 ? std::thread::hardware_concurrency() : config.jobs;
    workers = std::clamp<std::size_t>(workers, 1, config.runs);

    auto one = [&](std::size_t i) {
        RngStream rng(config.master_seed, i);
        results[i] = keep(run(config.run, rng));
    };

    if (workers == 1) {
        for (std::size_t i = 0; i < config.runs; ++i)
            one(i);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < config.runs && !failed; i = next++) {
                    try {
                        one(i);
                    } catch (...) {
                        if (!failed.exchange(true))
                            failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return results;
}

std::vector<CounterRecord> counters_only(RunTrace&& trace)
{
    return std::move(trace.generations);
}

EnsembleReport aggregate(const EnsembleConfig& config,
                         const std::vector<std::vector<CounterRecord>>& per_run)
{
    EnsembleReport rep;
    rep.algorithm = config.run.algorithm;
    rep.problem = config.run.problem.name;
    rep.runs = config.runs;
    rep.n = config.run.population_size;
    rep.generations = config.run.generations;
    rep.empirical_E_Y_by_generation.assign(rep.generations, 0.0);

    double p_sum = 0.0;
    std::size_t p_samples = 0;
    double x_sum = 0.0;
    double replacements = 0.0;
    for (const auto& records : per_run) {
        std::size_t encounters = 0;
        std::size_t successes = 0;
        for (std::size_t g = 0; g < records.size(); ++g) {
            const auto& rec = records[g];
            encounters += rec.worst_encounters;
            successes += rec.worst_replacements;
            x_sum += static_cast<double>(rec.worst_recomputations);
            replacements += static_cast<double>(rec.replacements);
            rep.empirical_E_Y_by_generation[g] += static_cast<double>(rec.best_updates);
        }
        if (encounters > 0) {
            p_sum += static_cast<double>(successes) / static_cast<double>(encounters);
            ++p_samples;
        } else {
            ++rep.runs_without_encounters;
        }
    }

    const double runs = static_cast<double>(rep.runs);
    const double cells = runs * static_cast<double>(rep.generations);
    for (auto& v : rep.empirical_E_Y_by_generation)
        v /= runs;
    double y_total = 0.0;
    for (double v : rep.empirical_E_Y_by_generation)
        y_total += v;
    rep.empirical_E_Y_mean = y_total / static_cast<double>(rep.generations);
    rep.mean_replacements = replacements / cells;

    if (rep.algorithm == Algorithm::sjaya) {
        rep.empirical_E_X = x_sum / cells;
        if (p_samples > 0) {
            rep.empirical_p = p_sum / static_cast<double>(p_samples);
            rep.theoretical_E_X = worst_update_expectation({rep.n, *rep.empirical_p});
            rep.below_theory_flag = *rep.empirical_E_X < *rep.theoretical_E_X;
        }
    }
    return rep;
}

} // namespace

EnsembleReport run_ensemble(const EnsembleConfig& config)
{
    return aggregate(config, map_runs(config, counters_only));
}

EnsembleReport run_ensemble(const EnsembleConfig& config, std::vector<RunTrace>& traces)
{
    traces = map_runs(config, [](RunTrace&& t) { return std::move(t); });
    std::vector<std::vector<CounterRecord>> per_run;
    per_run.reserve(traces.size());
    for (const auto& t : traces)
        per_run.push_back(t.generations);
    return aggregate(config, per_run);
}

TransitionEstimate estimate_transition_matrix(const EnsembleConfig& config)
{
    if (config.run.algorithm != Algorithm::sjaya)
        throw ConfigError("transition estimates need the sjaya algorithm");
    struct WorstHistory {
        std::size_t initial = 0;
        std::vector<WorstTransition> transitions;
    };
    const auto traces = map_runs(config, [](RunTrace&& t) {
        return WorstHistory{t.initial_worst_index, std::move(t.worst_transitions)};
    });
    const std::size_t n = config.run.population_size;

    TransitionEstimate est;
    est.n = n;
    est.runs = config.runs;
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(n, 0));
    std::vector<std::size_t> initial(n, 0);
    for (const auto& trace : traces) {
        ++initial[sweep_label(trace.initial, n) - 1];
        for (const auto& t : trace.transitions)
            ++counts[sweep_label(t.from, n) - 1][sweep_label(t.to, n) - 1];
    }

    est.matrix.assign(n, std::vector<double>(n, 0.0));
    est.row_counts.assign(n, 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t total = 0;
        for (std::size_t c : counts[k])
            total += c;
        est.row_counts[k] = total;
        if (total == 0)
            continue;
        for (std::size_t j = 0; j < n; ++j)
            est.matrix[k][j] = static_cast<double>(counts[k][j]) / static_cast<double>(total);
    }
    est.initial_distribution.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        est.initial_distribution[k] = static_cast<double>(initial[k]) / static_cast<double>(config.runs);
    return est;
}

std::vector<RowSideComparison> compare_row_sides(const TransitionEstimate& est)
{
    std::vector<RowSideComparison> out;
    for (std::size_t k = 1; k <= est.n; ++k) {
        const auto& row = est.matrix[k - 1];
        double visited = 0.0;
        for (std::size_t j = k; j <= est.n; ++j)
            visited += row[j - 1];
        RowSideComparison c{k, visited / static_cast<double>(est.n - k + 1), std::nullopt, false};
        if (k > 1) {
            double pending = 0.0;
            for (std::size_t j = 1; j < k; ++j)
                pending += row[j - 1];
            c.pending_mean = pending / static_cast<double>(k - 1);
            c.holds = *c.pending_mean >= c.visited_mean;
        }
        out.push_back(c);
    }
    return out;
}

TrendCheck best_update_trend_check(const std::vector<double>& series)
{
    TrendCheck out;
    std::ostringstream diag;
    if (series.size() < 2) {
        out.diagnostics = "need at least two generations";
        return out;
    }
    const double count = static_cast<double>(series.size());
    double mean_g = 0.0;
    double mean_y = 0.0;
    for (std::size_t g = 0; g < series.size(); ++g) {
        mean_g += static_cast<double>(g + 1);
        mean_y += series[g];
    }
    mean_g /= count;
    mean_y /= count;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t g = 0; g < series.size(); ++g) {
        const double dx = static_cast<double>(g + 1) - mean_g;
        sxy += dx * (series[g] - mean_y);
        sxx += dx * dx;
    }
    out.slope = sxy / sxx;
    out.first = series.front();
    out.last = series.back();
    out.passed = out.slope < 0.0 && out.first > out.last;
    diag << "slope=" << out.slope << " first=" << out.first << " last=" << out.last;
    if (!(out.slope < 0.0))
        diag << " (slope not negative)";
    if (!(out.first > out.last))
        diag << " (first does not exceed last)";
    out.diagnostics = diag.str();
    return out;
}

TrendCheck theorem2_empirical_check(const EnsembleReport& report)
{
    return best_update_trend_check(report.empirical_E_Y_by_generation);
}

} // namespace jayalab
