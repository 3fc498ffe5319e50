#include "jayalab/cost_model.hpp"

#include <cmath>

#include "jayalab/errors.hpp"
#include "jayalab/harmonic.hpp"
#include "jayalab/quadrature.hpp"

namespace jayalab {

void CostConstants::validate() const
{
    if (comparison < 0.0 || assignment < 0.0 || param_setup < 0.0 || candidate_op < 0.0)
        throw ConfigError("cost constants must be non-negative");
    if (!evaluation)
        throw ConfigError("missing evaluation cost function");
}

double cdf_pdf_integral(const Distribution& dist)
{
    auto integrand = [&dist](double x) { return dist.cdf(x) * dist.pdf(x); };
    return integrate(integrand, dist.effective_lower(), dist.effective_upper(), 1e-12, 16).value;
}

double expected_comparisons(const Distribution& dist, std::size_t n)
{
    return static_cast<double>(n) * cdf_pdf_integral(dist);
}

NaiveScanCosts naive_scan_costs(std::size_t n)
{
    JAYALAB_EXPECTS(n >= 1, "naive_scan_costs: n must be at least 1");
    return {n, harmonic(n)};
}

namespace {

struct Common {
    double n, d, G, phi, Hn, comp;
};

Common common_terms(const RunCostInputs& in)
{
    JAYALAB_EXPECTS(in.n >= 1, "run cost: n must be at least 1");
    in.costs.validate();
    return {static_cast<double>(in.n), static_cast<double>(in.d), static_cast<double>(in.generations),
            in.costs.evaluation(in.d), harmonic(in.n), expected_comparisons(in.dist, in.n)};
}

void push(CostBreakdown& out, std::string label, double value)
{
    out.terms.push_back({std::move(label), value});
    out.total += value;
}

} // namespace

CostBreakdown sjaya_run_cost(const RunCostInputs& in, double expected_assign, double worst_rescans)
{
    JAYALAB_EXPECTS(expected_assign >= 0.0 && worst_rescans >= 0.0,
                    "sjaya_run_cost: expectations must be non-negative");
    const auto c = common_terms(in);
    const auto& k = in.costs;
    const double scan = c.n * k.comparison + c.Hn * k.assignment;

    CostBreakdown out;
    push(out, "initial evaluation", c.n * c.phi);
    push(out, "initial best/worst scans", 2.0 * scan);
    push(out, "parameter setup", c.G * k.param_setup * c.d);
    push(out, "candidate creation", c.G * c.n * (k.candidate_op * c.d + c.phi));
    push(out, "acceptance tests", c.G * c.n * k.comparison);
    push(out, "replacements", c.G * c.comp * k.assignment);
    push(out, "best-update tests", c.G * c.comp * k.comparison);
    push(out, "best-index updates", c.G * expected_assign * k.assignment);
    push(out, "worst-index tests", c.G * c.comp * k.comparison);
    push(out, "worst re-scans", c.G * worst_rescans * scan);
    return out;
}

CostBreakdown jaya_run_cost(const RunCostInputs& in)
{
    const auto c = common_terms(in);
    const auto& k = in.costs;
    const double scan = c.n * k.comparison + c.Hn * k.assignment;

    CostBreakdown out;
    push(out, "initial evaluation", c.n * c.phi);
    push(out, "best/worst scans", c.G * 2.0 * scan);
    push(out, "parameter setup", c.G * k.param_setup * c.d);
    push(out, "candidate creation", c.G * c.n * (k.candidate_op * c.d + c.phi));
    push(out, "acceptance tests", c.G * c.n * k.comparison);
    push(out, "replacements", c.G * c.comp * k.assignment);
    return out;
}

AdditionalCostBound additional_cost_bound(std::size_t n, const CostConstants& costs)
{
    JAYALAB_EXPECTS(n >= 1, "additional_cost_bound: n must be at least 1");
    costs.validate();
    const double nd = static_cast<double>(n);
    const double Ca = costs.assignment;
    const double Cc = costs.comparison;
    AdditionalCostBound out;
    out.exact = 0.5 * nd * (2.0 * Ca + Cc) - 0.3 * (nd * Cc + harmonic(n) * Ca);
    out.large_n = (nd - 0.3 * std::log(nd) - 0.3 * kEulerGamma) * Ca + 0.2 * nd * Cc;
    return out;
}

} // namespace jayalab
