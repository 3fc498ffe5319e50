// jaya_lab: command-line front end for the jayalab library.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jayalab/benchmarks.hpp"
#include "jayalab/cost_model.hpp"
#include "jayalab/distributions.hpp"
#include "jayalab/errors.hpp"
#include "jayalab/experiments.hpp"
#include "jayalab/harmonic.hpp"
#include "jayalab/kernels.hpp"
#include "jayalab/models.hpp"
#include "jayalab/optimizers.hpp"
#include "jayalab/reference_values.hpp"
#include "jayalab/report.hpp"
#include "jayalab/reproduce.hpp"

using namespace jayalab;

namespace {

struct Globals {
    std::string format = "csv";
    std::string output;
    std::size_t jobs = 1;
    std::string simd;
};

class Sink {
public:
    explicit Sink(const Globals& g) : format_(parse_format(g.format))
    {
        if (!g.output.empty()) {
            file_ = std::make_unique<std::ofstream>(g.output);
            if (!*file_)
                throw ConfigError("cannot open output file '" + g.output + "'");
        }
    }

    std::ostream& stream() { return file_ ? *file_ : std::cout; }
    OutputFormat format() const { return format_; }

    void table(const Table& t)
    {
        if (count_++ > 0)
            stream() << '\n';
        write_table(stream(), t, format_);
    }

private:
    OutputFormat format_;
    std::unique_ptr<std::ofstream> file_;
    std::size_t count_ = 0;
};

std::vector<std::size_t> default_worst_sizes()
{
    std::vector<std::size_t> out;
    for (const auto& row : reference::kMaxWorstExpectation)
        out.push_back(row.n);
    return out;
}

std::vector<std::size_t> default_best_sizes()
{
    std::vector<std::size_t> out;
    for (const auto& row : reference::kBestUpdateGrowth)
        out.push_back(row.n);
    return out;
}

std::vector<Distribution> parse_distributions(const std::vector<std::string>& names)
{
    std::vector<Distribution> out;
    if (names.empty())
        return {Distribution::exponential(), Distribution::logistic(), Distribution::normal(),
                Distribution::uniform()};
    for (const auto& n : names)
        out.push_back(Distribution::parse(n));
    return out;
}

Table checks_table(const std::vector<Check>& checks)
{
    Table t;
    t.title = "Checks";
    t.columns = {"check", "kind", "status", "detail"};
    for (const auto& c : checks)
        t.rows.push_back({Cell::str(c.name), Cell::str(c.hard ? "hard" : "soft"),
                          Cell::str(c.passed ? "pass" : (c.hard ? "FAIL" : "flagged")),
                          Cell::str(c.detail)});
    return t;
}

RunConfig make_run_config(const std::string& algorithm, const std::string& function,
                          std::optional<std::size_t> dimension, std::size_t n,
                          std::size_t generations, std::uint64_t seed)
{
    RunConfig cfg;
    cfg.algorithm = parse_algorithm(algorithm);
    cfg.problem = benchmark(function, dimension);
    cfg.population_size = n;
    cfg.generations = generations;
    cfg.seed = seed;
    cfg.validate();
    return cfg;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"jaya_lab: Jaya/SJaya experiments, stochastic models and cost estimates"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read flags from a TOML/INI key-value file");

    Globals g;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "markdown", "md"}))
        ->capture_default_str();
    app.add_option("--output,-o", g.output, "Write output to this file instead of stdout");
    app.add_option("--jobs,-j", g.jobs, "Worker threads for ensembles (0 = all cores)")
        ->envname("JAYA_LAB_JOBS")
        ->capture_default_str();
    app.add_option("--simd", g.simd, "Force a kernel set: scalar|avx2|neon");

    // theory-worst
    auto* tw = app.add_subcommand("theory-worst", "E(X | n) for the worst-index re-scan count");
    std::vector<std::size_t> tw_n = default_worst_sizes();
    double tw_p = 1.0;
    tw->add_option("--n", tw_n, "Population sizes")->delimiter(',')->check(CLI::PositiveNumber);
    tw->add_option("--p", tw_p, "Replacement probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();

    // theory-best
    auto* tb = app.add_subcommand("theory-best", "E(Y_g; n, F) for best-index updates");
    std::vector<std::string> tb_dist;
    std::vector<std::size_t> tb_n = default_best_sizes();
    std::size_t tb_g = 1;
    tb->add_option("--dist", tb_dist,
                   "Distributions: uniform[:a:b] exponential[:lambda] normal[:mu:sigma] logistic "
                   "(default: all four)")
        ->delimiter(',');
    tb->add_option("--n", tb_n, "Population sizes")->delimiter(',')->check(CLI::PositiveNumber);
    tb->add_option("--g", tb_g, "Generation")->check(CLI::PositiveNumber)->capture_default_str();

    // cost
    auto* co = app.add_subcommand("cost", "Abstract run-cost breakdown");
    std::size_t co_n = 100, co_d = 10, co_gens = 20, co_assign_g = 1;
    std::string co_dist = "uniform", co_alg = "sjaya";
    double co_cc = 1.0, co_ca = 1.0, co_cp = 1.0, co_cop = 1.0, co_rescans = 1.7;
    co->add_option("--n", co_n, "Population size")->check(CLI::PositiveNumber)->capture_default_str();
    co->add_option("--d", co_d, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
    co->add_option("--generations", co_gens, "Generations")->capture_default_str();
    co->add_option("--dist", co_dist, "Fitness distribution")->capture_default_str();
    co->add_option("--algorithm", co_alg, "jaya|sjaya")->capture_default_str();
    co->add_option("--cc", co_cc, "Comparison cost")->check(CLI::NonNegativeNumber)->capture_default_str();
    co->add_option("--ca", co_ca, "Assignment cost")->check(CLI::NonNegativeNumber)->capture_default_str();
    co->add_option("--cp", co_cp, "Parameter setup cost per dimension")->check(CLI::NonNegativeNumber)->capture_default_str();
    co->add_option("--cop", co_cop, "Candidate operation cost per dimension")->check(CLI::NonNegativeNumber)->capture_default_str();
    co->add_option("--rescans", co_rescans, "Expected worst re-scans per generation (sjaya)")
        ->check(CLI::NonNegativeNumber)->capture_default_str();
    co->add_option("--assign-generation", co_assign_g,
                   "Generation whose E(Y_g) is charged for best-index assignments (sjaya)")
        ->check(CLI::PositiveNumber)->capture_default_str();

    // run
    auto* ru = app.add_subcommand("run", "Single optimizer run; prints per-generation counters");
    std::string ru_alg = "sjaya", ru_fn = "ackley";
    std::optional<std::size_t> ru_dim;
    std::size_t ru_n = 10, ru_gens = 20;
    std::uint64_t ru_seed = kDefaultSeed;
    ru->add_option("--algorithm", ru_alg, "jaya|sjaya")->capture_default_str();
    ru->add_option("--function", ru_fn, "Benchmark function")->capture_default_str();
    ru->add_option("--dimension", ru_dim, "Dimension (default per function)");
    ru->add_option("--n", ru_n, "Population size")->check(CLI::PositiveNumber)->capture_default_str();
    ru->add_option("--generations", ru_gens, "Generations")->capture_default_str();
    ru->add_option("--seed", ru_seed, "Seed")->capture_default_str();

    // ensemble
    auto* en = app.add_subcommand("ensemble", "Independent seeded runs with aggregated statistics");
    std::string en_alg = "sjaya", en_fn = "ackley";
    std::optional<std::size_t> en_dim;
    std::size_t en_n = 10, en_gens = 20, en_runs = 500;
    std::uint64_t en_seed = kDefaultSeed;
    bool en_by_gen = false;
    en->add_option("--algorithm", en_alg, "jaya|sjaya")->capture_default_str();
    en->add_option("--function", en_fn, "Benchmark function")->capture_default_str();
    en->add_option("--dimension", en_dim, "Dimension (default per function)");
    en->add_option("--n", en_n, "Population size")->check(CLI::PositiveNumber)->capture_default_str();
    en->add_option("--generations", en_gens, "Generations")->check(CLI::PositiveNumber)->capture_default_str();
    en->add_option("--runs", en_runs, "Runs")->check(CLI::PositiveNumber)->capture_default_str();
    en->add_option("--seed", en_seed, "Master seed")->capture_default_str();
    en->add_flag("--by-generation", en_by_gen, "Also print mean best-index updates per generation");

    // oracle
    auto* orc = app.add_subcommand("oracle", "Monte-Carlo estimate of the re-scan count pmf");
    std::size_t or_n = 10, or_k = 10, or_trials = 1000000;
    double or_p = 1.0;
    std::uint64_t or_seed = kDefaultSeed;
    orc->add_option("--n", or_n, "Population size")->check(CLI::PositiveNumber)->capture_default_str();
    orc->add_option("--k", or_k, "Label of the first worst encounter (1..n)")->check(CLI::PositiveNumber)->capture_default_str();
    orc->add_option("--p", or_p, "Replacement probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
    orc->add_option("--trials", or_trials, "Trials")->check(CLI::PositiveNumber)->capture_default_str();
    orc->add_option("--seed", or_seed, "Seed")->capture_default_str();

    // transition
    auto* tr = app.add_subcommand("transition", "Empirical worst-index transition matrix (SJaya)");
    std::string tr_fn = "chung_reynolds";
    std::optional<std::size_t> tr_dim = 10;
    std::size_t tr_n = 10, tr_gens = 10, tr_runs = 5000;
    std::uint64_t tr_seed = kDefaultSeed;
    tr->add_option("--function", tr_fn, "Benchmark function")->capture_default_str();
    tr->add_option("--dimension", tr_dim, "Dimension");
    tr->add_option("--n", tr_n, "Population size")->check(CLI::PositiveNumber)->capture_default_str();
    tr->add_option("--generations", tr_gens, "Generations")->check(CLI::PositiveNumber)->capture_default_str();
    tr->add_option("--runs", tr_runs, "Runs")->check(CLI::PositiveNumber)->capture_default_str();
    tr->add_option("--seed", tr_seed, "Master seed")->capture_default_str();

    // reproduce
    auto* rp = app.add_subcommand("reproduce", "Regenerate a reference table and check tolerances");
    std::string rp_table;
    std::optional<std::size_t> rp_runs;
    std::uint64_t rp_seed = kDefaultSeed;
    std::vector<std::size_t> rp_sizes;
    rp->add_option("--table", rp_table, "1|2|3|4|5|matrix")
        ->required()
        ->check(CLI::IsMember({"1", "2", "3", "4", "5", "matrix"}));
    rp->add_option("--runs", rp_runs, "Runs (default 500 for tables 2/5, 5000 for 3/matrix)")
        ->check(CLI::PositiveNumber);
    rp->add_option("--seed", rp_seed, "Master seed")->capture_default_str();
    rp->add_option("--sizes", rp_sizes, "Tables 2/5: only these population sizes")->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (!g.simd.empty())
            simd::set_active_isa(simd::parse_isa(g.simd));
        Sink out(g);

        if (*tw) {
            const WorstModelParams probe{1, tw_p};
            probe.validate();
            Table t;
            t.title = "E(X | n) at p = " + format_full(tw_p);
            t.columns = {"n", "E_X"};
            for (std::size_t n : tw_n)
                t.rows.push_back({Cell::integer(static_cast<long long>(n)),
                                  Cell::num(worst_update_expectation({n, tw_p}), 6)});
            out.table(t);
            return 0;
        }

        if (*tb) {
            const auto dists = parse_distributions(tb_dist);
            Table t;
            t.title = "E(Y_" + std::to_string(tb_g) + "; n, F)";
            t.columns = {"n"};
            for (const auto& d : dists)
                t.columns.push_back(d.describe());
            for (std::size_t n : tb_n) {
                std::vector<Cell> row{Cell::integer(static_cast<long long>(n))};
                for (const auto& d : dists)
                    row.push_back(Cell::num(best_update_expectation(d, n, tb_g), 4));
                t.rows.push_back(std::move(row));
            }
            std::vector<Cell> limit{Cell::str("limit")};
            std::vector<Cell> bound{Cell::str("bound")};
            for (const auto& d : dists) {
                limit.push_back(Cell::opt(best_update_limit(d), 4));
                bound.push_back(Cell::num(best_update_upper_bound(d), 4));
            }
            t.rows.push_back(std::move(limit));
            t.rows.push_back(std::move(bound));
            out.table(t);
            return 0;
        }

        if (*co) {
            RunCostInputs in;
            in.n = co_n;
            in.d = co_d;
            in.generations = co_gens;
            in.dist = Distribution::parse(co_dist);
            in.costs.comparison = co_cc;
            in.costs.assignment = co_ca;
            in.costs.param_setup = co_cp;
            in.costs.candidate_op = co_cop;
            in.costs.validate();
            const Algorithm alg = parse_algorithm(co_alg);
            const CostBreakdown b =
                alg == Algorithm::jaya
                    ? jaya_run_cost(in)
                    : sjaya_run_cost(in, best_update_expectation(in.dist, co_n, co_assign_g), co_rescans);
            Table t = cost_breakdown_table(b);
            t.title = std::string(algorithm_name(alg)) + " cost breakdown";
            const AdditionalCostBound extra = additional_cost_bound(co_n, in.costs);
            t.rows.push_back({Cell::str("additional_cost_bound_exact"), Cell::num(extra.exact, 4)});
            t.rows.push_back({Cell::str("additional_cost_bound_large_n"), Cell::num(extra.large_n, 4)});
            out.table(t);
            return 0;
        }

        if (*ru) {
            const RunConfig cfg = make_run_config(ru_alg, ru_fn, ru_dim, ru_n, ru_gens, ru_seed);
            const RunTrace trace = run(cfg);
            if (out.format() == OutputFormat::csv) {
                write_trace_csv_header(out.stream());
                write_trace_csv(out.stream(), trace, 0);
            } else {
                out.table(trace_table(trace, 0));
            }
            return 0;
        }

        if (*en) {
            EnsembleConfig cfg;
            cfg.run = make_run_config(en_alg, en_fn, en_dim, en_n, en_gens, en_seed);
            cfg.runs = en_runs;
            cfg.master_seed = en_seed;
            cfg.jobs = g.jobs;
            const EnsembleReport rep = run_ensemble(cfg);
            out.table(ensemble_summary_table({rep}));
            if (en_by_gen)
                out.table(ensemble_generation_table(rep));
            return 0;
        }

        if (*orc) {
            const WorstModelParams params{or_n, or_p};
            params.validate();
            if (or_k > or_n)
                throw ConfigError("--k must be in 1..n");
            const auto est = oracle_pmf_estimate(or_k, params, or_trials, or_seed);
            Table t;
            t.title = "Re-scan count pmf, n = " + std::to_string(or_n) + ", k = " + std::to_string(or_k)
                      + ", p = " + format_full(or_p);
            t.columns = {"m", "pmf", "monte_carlo"};
            for (std::size_t m = 0; m < est.size(); ++m)
                t.rows.push_back({Cell::integer(static_cast<long long>(m)),
                                  Cell::num(worst_update_pmf(m, or_k, params), 6), Cell::num(est[m], 6)});
            out.table(t);
            return 0;
        }

        if (*tr) {
            EnsembleConfig cfg;
            cfg.run = make_run_config("sjaya", tr_fn, tr_dim, tr_n, tr_gens, tr_seed);
            cfg.runs = tr_runs;
            cfg.master_seed = tr_seed;
            cfg.jobs = g.jobs;
            const TransitionEstimate est = estimate_transition_matrix(cfg);
            out.table(transition_matrix_table(est));
            out.table(initial_distribution_table(est));
            return 0;
        }

        if (*rp) {
            Reproduction r;
            if (rp_table == "1") {
                r = reproduce_max_worst_expectation();
            } else if (rp_table == "4") {
                r = reproduce_best_update_growth();
            } else if (rp_table == "2" || rp_table == "5") {
                EnsembleOptions opt;
                opt.runs = rp_runs.value_or(opt.runs);
                opt.seed = rp_seed;
                opt.jobs = g.jobs;
                opt.sizes = rp_sizes;
                r = reproduce_ensembles(opt, rp_table == "2" ? EnsembleTables::worst : EnsembleTables::best);
            } else {
                TransitionOptions opt;
                opt.runs = rp_runs.value_or(opt.runs);
                opt.seed = rp_seed;
                opt.jobs = g.jobs;
                r = reproduce_transition(opt, rp_table == "matrix");
            }
            for (const auto& t : r.tables)
                out.table(t);
            out.table(checks_table(r.checks));
            if (!r.passed()) {
                std::cerr << "jaya_lab: reproduction of table " << rp_table << " failed\n";
                return 1;
            }
            return 0;
        }
    } catch (const ConfigError& e) {
        std::cerr << "jaya_lab: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "jaya_lab: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
