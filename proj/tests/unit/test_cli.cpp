#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "jayalab/benchmarks.hpp"
#include "jayalab/cost_model.hpp"
#include "jayalab/distributions.hpp"
#include "jayalab/experiments.hpp"
#include "jayalab/models.hpp"
#include "jayalab/optimizers.hpp"
#include "jayalab/report.hpp"
#include "jayalab/reproduce.hpp"

using namespace jayalab;

namespace {

struct Result {
    int status;
    std::string out;
};

Result cli(const std::string& args)
{
    const std::string cmd = std::string(JAYA_LAB_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {-1, {}};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        out.push_back(l);
    return out;
}

std::string to_csv(const Table& t)
{
    std::ostringstream os;
    write_csv(os, t);
    return os.str();
}

} // namespace

TEST(Cli, TheoryWorstMatchesLibrary)
{
    const Result r = cli("theory-worst --n 10,100 --p 1");
    ASSERT_EQ(r.status, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[0], "n,E_X");
    EXPECT_EQ(l[1], "10," + format_full(worst_update_expectation({10, 1.0})));
    EXPECT_EQ(l[2], "100," + format_full(worst_update_expectation({100, 1.0})));
    EXPECT_NEAR(std::stod(l[1].substr(3)), 1.593742, 1e-6);
    EXPECT_NEAR(std::stod(l[2].substr(4)), 1.704813, 1e-6);
}

TEST(Cli, TheoryWorstZeroP)
{
    const Result r = cli("theory-worst --n 5,50,500 --p 0");
    ASSERT_EQ(r.status, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 4u);
    for (std::size_t i = 1; i < l.size(); ++i)
        EXPECT_EQ(l[i].substr(l[i].find(',') + 1), "0");
}

TEST(Cli, TheoryWorstHalfP)
{
    const Result r = cli("theory-worst --n 50 --p 0.5");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out).at(1), "50," + format_full(worst_update_expectation({50, 0.5})));
}

TEST(Cli, TheoryBestExamples)
{
    struct Case {
        const char* dist;
        std::size_t n;
        double reference;
    };
    for (const Case& c : {Case{"exponential", 1, 0.3679}, Case{"uniform", 10000, 0.6931}, Case{"normal", 1, 0.5}}) {
        const Result r = cli(std::string("theory-best --dist ") + c.dist + " --n " + std::to_string(c.n));
        ASSERT_EQ(r.status, 0);
        const auto l = lines(r.out);
        ASSERT_GE(l.size(), 2u);
        const std::string value = l[1].substr(l[1].find(',') + 1);
        EXPECT_EQ(value, format_full(best_update_expectation(Distribution::parse(c.dist), c.n, 1)));
        EXPECT_NEAR(std::stod(value), c.reference, 5e-5);
    }
}

TEST(Cli, TheoryBestIncludesLimitAndBoundRows)
{
    const Result r = cli("theory-best --dist normal,uniform --n 10");
    ASSERT_EQ(r.status, 0);
    const auto l = lines(r.out);
    ASSERT_EQ(l.size(), 4u);
    EXPECT_EQ(l[2], "limit,---," + format_full(*best_update_limit(Distribution::uniform())));
    EXPECT_EQ(l[3], "bound," + format_full(best_update_upper_bound(Distribution::normal())) + ","
                        + format_full(best_update_upper_bound(Distribution::uniform())));
}

TEST(Cli, CostMatchesLibrary)
{
    const Result r = cli("cost --n 100 --d 30 --generations 20 --dist uniform --algorithm sjaya");
    ASSERT_EQ(r.status, 0);
    RunCostInputs in;
    in.n = 100;
    in.d = 30;
    in.generations = 20;
    const CostBreakdown b = sjaya_run_cost(in, best_update_expectation(in.dist, 100, 1));
    EXPECT_NE(r.out.find("total," + format_full(b.total) + "\n"), std::string::npos) << r.out;
    const auto extra = additional_cost_bound(100, in.costs);
    EXPECT_NE(r.out.find("additional_cost_bound_exact," + format_full(extra.exact)), std::string::npos);
}

TEST(Cli, RunMatchesLibraryTrace)
{
    const Result r = cli("run --algorithm sjaya --function goldstein_price --n 10 --generations 5 --seed 4");
    ASSERT_EQ(r.status, 0);
    RunConfig c;
    c.problem = benchmark("goldstein_price");
    c.population_size = 10;
    c.generations = 5;
    c.seed = 4;
    std::ostringstream os;
    write_trace_csv_header(os);
    write_trace_csv(os, run(c), 0);
    EXPECT_EQ(r.out, os.str());
}

TEST(Cli, EnsembleMatchesLibrary)
{
    const Result r = cli("ensemble --function step --n 10 --generations 5 --runs 20 --seed 3 --jobs 2");
    ASSERT_EQ(r.status, 0);
    EnsembleConfig c;
    c.run.problem = benchmark("step");
    c.run.population_size = 10;
    c.run.generations = 5;
    c.runs = 20;
    c.master_seed = 3;
    EXPECT_EQ(r.out, to_csv(ensemble_summary_table({run_ensemble(c)})));
}

TEST(Cli, JobsFromEnvironmentAndConfigFile)
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto cfg = dir / "jaya_lab_test.ini";
    {
        std::ofstream f(cfg);
        f << "format=markdown\n[theory-worst]\nn=10\np=1\n";
    }
    const Result r = cli("--config " + cfg.string() + " theory-worst");
    std::filesystem::remove(cfg);
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("| 10 | 1.593742 |"), std::string::npos) << r.out;

    const Result e = cli("ensemble --function step --n 10 --generations 3 --runs 4 --seed 1");
    setenv("JAYA_LAB_JOBS", "3", 1);
    const Result f = cli("ensemble --function step --n 10 --generations 3 --runs 4 --seed 1");
    unsetenv("JAYA_LAB_JOBS");
    EXPECT_EQ(f.status, 0);
    EXPECT_EQ(e.out, f.out);
}

TEST(Cli, ReproduceTablesPassAndFailExitCodes)
{
    EXPECT_EQ(cli("reproduce --table 1").status, 0);
    EXPECT_EQ(cli("reproduce --table 4").status, 0);
    const Result t3 = cli("reproduce --table 3 --runs 5000 --seed 9");
    EXPECT_EQ(t3.status, 0);
    EXPECT_NE(t3.out.find("\"initial histogram within [0.08, 0.12]\",hard,pass"), std::string::npos) << t3.out;
    EXPECT_NE(cli("reproduce --table 7").status, 0);
    EXPECT_NE(cli("reproduce").status, 0);
}

TEST(Cli, ReproduceTable1OutputMatchesLibrary)
{
    const Result r = cli("reproduce --table 1");
    const Reproduction lib = reproduce_max_worst_expectation();
    EXPECT_EQ(r.out.substr(0, to_csv(lib.tables[0]).size()), to_csv(lib.tables[0]));
}

TEST(Cli, UsageErrors)
{
    EXPECT_NE(cli("").status, 0);
    EXPECT_NE(cli("theory-worst --p 2").status, 0);
    EXPECT_NE(cli("theory-worst --n 0").status, 0);
    EXPECT_NE(cli("run --function sphere").status, 0);
    EXPECT_NE(cli("theory-best --dist cauchy").status, 0);
    EXPECT_NE(cli("--format xml theory-worst").status, 0);
}

TEST(Cli, OutputFile)
{
    const auto path = std::filesystem::temp_directory_path() / "jaya_lab_out.csv";
    const Result r = cli("theory-worst --n 10 --output " + path.string());
    ASSERT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    std::filesystem::remove(path);
    EXPECT_EQ(ss.str(), "n,E_X\n10," + format_full(worst_update_expectation({10, 1.0})) + "\n");
}
