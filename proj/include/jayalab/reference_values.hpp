#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

// Published reference figures the reproduction pipelines compare against.

namespace jayalab::reference {

struct MaxWorstExpectationRow {
    std::size_t n;
    double value; // E(X | n) at p = 1
};

inline constexpr std::array<MaxWorstExpectationRow, 12> kMaxWorstExpectation{{
    {10, 1.593742},    {50, 1.691588},    {100, 1.704813},   {500, 1.715568},
    {1500, 1.717376},  {2500, 1.717738},  {3500, 1.717893},  {4500, 1.717979},
    {10000, 1.718145}, {20000, 1.718213}, {30000, 1.718236}, {40000, 1.718247},
}};

struct BestUpdateGrowthRow {
    std::size_t n;
    double exponential;
    double logistic;
    double normal;
    double uniform;
};

// E(Y_1; n, F) by population size.
inline constexpr std::array<BestUpdateGrowthRow, 7> kBestUpdateGrowth{{
    {1, 0.3679, 0.5, 0.5, 0.5},
    {10, 0.3889, 0.4016, 0.4451, 0.6688},
    {50, 0.3892, 0.3916, 0.4261, 0.6882},
    {100, 0.3892, 0.3904, 0.4212, 0.6907},
    {500, 0.3892, 0.3894, 0.4136, 0.6926},
    {5000, 0.3892, 0.3892, 0.4074, 0.6931},
    {10000, 0.3892, 0.3892, 0.4061, 0.6931},
}};

// Limit row (n -> infinity); normal has none.
inline constexpr double kBestUpdateLimitExponential = 0.3892;
inline constexpr double kBestUpdateLimitLogistic = 0.3892;
inline constexpr double kBestUpdateLimitUniform = 0.6931;

// SJaya ensembles, 500 runs x 20 generations.
struct EnsembleRow {
    std::string_view function;
    std::size_t n;
    double p;
    double empirical_E_X;
    double theoretical_E_X;
    double E_Y_gen1;
    double E_Y_gen10;
    double E_Y_gen20;
    double E_Y_mean;
};

inline constexpr std::array<EnsembleRow, 20> kEnsembles{{
    {"ackley", 10, 0.9230, 1.701, 1.4178, 0.916, 0.484, 0.452, 0.5276},
    {"ackley", 50, 0.9977, 2.0547, 1.6855, 0.488, 0.278, 0.184, 0.2882},
    {"ackley", 100, 0.9985, 2.0786, 1.7008, 0.352, 0.216, 0.182, 0.2261},
    {"ackley", 1000, 0.9996, 2.1632, 1.7158, 0.130, 0.156, 0.122, 0.1495},
    {"rosenbrock", 10, 0.8740, 1.5262, 1.3115, 0.650, 0.396, 0.404, 0.445},
    {"rosenbrock", 50, 0.9911, 1.9779, 1.6682, 0.254, 0.230, 0.186, 0.2275},
    {"rosenbrock", 100, 0.9956, 2.0029, 1.6931, 0.206, 0.168, 0.112, 0.1763},
    {"rosenbrock", 1000, 0.9988, 2.0514, 1.7137, 0.052, 0.104, 0.090, 0.0868},
    {"chung_reynolds", 10, 0.9335, 1.7408, 1.4411, 0.854, 0.46, 0.49, 0.5353},
    {"chung_reynolds", 50, 0.9987, 2.0366, 1.6882, 0.418, 0.232, 0.192, 0.2852},
    {"chung_reynolds", 100, 0.9994, 2.0508, 1.7032, 0.300, 0.174, 0.124, 0.2148},
    {"chung_reynolds", 1000, 1.0000, 2.0984, 1.7169, 0.084, 0.146, 0.148, 0.1386},
    {"step", 10, 0.9590, 1.8392, 1.4986, 0.904, 0.506, 0.516, 0.5858},
    {"step", 50, 0.9994, 2.0908, 1.6900, 0.468, 0.276, 0.236, 0.3116},
    {"step", 100, 0.9998, 2.1297, 1.7043, 0.400, 0.222, 0.154, 0.2614},
    {"step", 1000, 1.0000, 2.2024, 1.7169, 0.148, 0.204, 0.106, 0.1836},
    {"goldstein_price", 10, 0.5059, 0.6554, 0.6381, 0.600, 0.170, 0.076, 0.208},
    {"goldstein_price", 50, 0.6286, 0.9442, 0.8677, 0.610, 0.138, 0.058, 0.196},
    {"goldstein_price", 100, 0.6806, 1.1151, 0.9705, 0.620, 0.142, 0.009, 0.1942},
    {"goldstein_price", 1000, 0.7805, 1.6763, 1.1819, 0.588, 0.150, 0.074, 0.1802},
}};

// Worst-index transitions on Chung-Reynolds (d = 10, n = 10, 10
// generations, 5000 runs). Rows and columns in label order 10..1.
inline constexpr std::array<std::array<double, 10>, 10> kTransitionMatrix{{
    {0.042, 0.112, 0.123, 0.108, 0.111, 0.106, 0.101, 0.096, 0.102, 0.098},
    {0.089, 0.047, 0.118, 0.113, 0.117, 0.105, 0.105, 0.104, 0.103, 0.099},
    {0.098, 0.084, 0.042, 0.125, 0.116, 0.113, 0.108, 0.11, 0.104, 0.1},
    {0.099, 0.095, 0.096, 0.045, 0.113, 0.121, 0.118, 0.104, 0.105, 0.105},
    {0.102, 0.096, 0.092, 0.092, 0.048, 0.123, 0.111, 0.119, 0.11, 0.109},
    {0.1, 0.099, 0.097, 0.09, 0.092, 0.041, 0.128, 0.119, 0.121, 0.114},
    {0.11, 0.103, 0.105, 0.098, 0.096, 0.093, 0.04, 0.125, 0.112, 0.119},
    {0.101, 0.112, 0.104, 0.097, 0.102, 0.101, 0.093, 0.048, 0.126, 0.115},
    {0.113, 0.108, 0.105, 0.102, 0.108, 0.095, 0.096, 0.098, 0.046, 0.129},
    {0.114, 0.116, 0.108, 0.106, 0.106, 0.105, 0.101, 0.099, 0.099, 0.046},
}};

// Initial worst-label histogram, labels 10..1.
inline constexpr std::array<double, 10> kInitialWorstDistribution{
    0.1024, 0.0954, 0.1012, 0.0970, 0.0976, 0.0984, 0.0972, 0.1030, 0.1040, 0.1038};

} // namespace jayalab::reference
