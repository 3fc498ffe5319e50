#include "jayalab/report.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>

#include "jayalab/errors.hpp"

namespace jayalab {

OutputFormat parse_format(const std::string& name)
{
    if (name == "csv")
        return OutputFormat::csv;
    if (name == "markdown" || name == "md")
        return OutputFormat::markdown;
    throw ConfigError("unknown output format '" + name + "' (expected csv|markdown)");
}

std::string format_full(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_fixed(double v, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

namespace {

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

void write_csv(std::ostream& os, const Table& table)
{
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << csv_escape(table.columns[c]);
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            os << (c ? "," : "");
            os << (row[c].number ? format_full(*row[c].number) : csv_escape(row[c].text));
        }
        os << '\n';
    }
}

void write_markdown(std::ostream& os, const Table& table)
{
    if (!table.title.empty())
        os << "### " << table.title << "\n\n";
    os << '|';
    for (const auto& c : table.columns)
        os << ' ' << c << " |";
    os << "\n|";
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        os << "---|";
    os << '\n';
    for (const auto& row : table.rows) {
        os << '|';
        for (const auto& cell : row)
            os << ' ' << (cell.number ? format_fixed(*cell.number, cell.digits) : cell.text) << " |";
        os << '\n';
    }
    os << '\n';
}

void write_table(std::ostream& os, const Table& table, OutputFormat format)
{
    if (format == OutputFormat::csv)
        write_csv(os, table);
    else
        write_markdown(os, table);
}

Table ensemble_summary_table(const std::vector<EnsembleReport>& reports)
{
    Table t;
    t.title = "Ensemble summary";
    t.columns = {"function", "algorithm", "n", "runs", "generations", "empirical_p",
                 "empirical_E_X", "theoretical_E_X", "E_Y_gen1", "E_Y_mean",
                 "runs_without_encounters", "below_theory_flag"};
    for (const auto& r : reports) {
        t.rows.push_back({Cell::str(r.problem), Cell::str(std::string(algorithm_name(r.algorithm))),
                          Cell::integer(static_cast<long long>(r.n)),
                          Cell::integer(static_cast<long long>(r.runs)),
                          Cell::integer(static_cast<long long>(r.generations)),
                          Cell::opt(r.empirical_p, 4), Cell::opt(r.empirical_E_X, 4),
                          Cell::opt(r.theoretical_E_X, 4),
                          Cell::num(r.empirical_E_Y_by_generation.front(), 3),
                          Cell::num(r.empirical_E_Y_mean, 4),
                          Cell::integer(static_cast<long long>(r.runs_without_encounters)),
                          Cell::str(r.below_theory_flag ? "yes" : "no")});
    }
    return t;
}

Table ensemble_generation_table(const EnsembleReport& report)
{
    Table t;
    t.title = "Best-index updates by generation (" + report.problem + ", n="
              + std::to_string(report.n) + ")";
    t.columns = {"generation", "empirical_E_Y"};
    for (std::size_t g = 0; g < report.empirical_E_Y_by_generation.size(); ++g)
        t.rows.push_back({Cell::integer(static_cast<long long>(g + 1)),
                          Cell::num(report.empirical_E_Y_by_generation[g], 3)});
    return t;
}

Table transition_matrix_table(const TransitionEstimate& est)
{
    Table t;
    t.title = "Worst-index transition matrix (row: current label, column: next label)";
    t.columns.push_back("current\\next");
    for (std::size_t j = est.n; j >= 1; --j)
        t.columns.push_back(std::to_string(j));
    t.columns.push_back("samples");
    for (std::size_t k = est.n; k >= 1; --k) {
        std::vector<Cell> row{Cell::integer(static_cast<long long>(k))};
        for (std::size_t j = est.n; j >= 1; --j)
            row.push_back(Cell::num(est.matrix[k - 1][j - 1], 3));
        row.push_back(Cell::integer(static_cast<long long>(est.row_counts[k - 1])));
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table initial_distribution_table(const TransitionEstimate& est)
{
    Table t;
    t.title = "Initial distribution of the worst label";
    t.columns = {"label", "probability"};
    for (std::size_t k = est.n; k >= 1; --k)
        t.rows.push_back({Cell::integer(static_cast<long long>(k)),
                          Cell::num(est.initial_distribution[k - 1], 4)});
    return t;
}

Table cost_breakdown_table(const CostBreakdown& breakdown)
{
    Table t;
    t.title = "Cost breakdown";
    t.columns = {"term", "cost"};
    for (const auto& term : breakdown.terms)
        t.rows.push_back({Cell::str(term.label), Cell::num(term.value, 4)});
    t.rows.push_back({Cell::str("total"), Cell::num(breakdown.total, 4)});
    return t;
}

Table trace_table(const RunTrace& trace, std::size_t run_id)
{
    Table t;
    t.title = "Run trace";
    t.columns = {"run_id", "generation", "worst_recomputations", "best_updates", "replacements",
                 "worst_encounters", "worst_replacements", "best_fitness"};
    auto i = [](std::size_t v) { return Cell::integer(static_cast<long long>(v)); };
    for (std::size_t g = 0; g < trace.generations.size(); ++g) {
        const auto& r = trace.generations[g];
        t.rows.push_back({i(run_id), i(r.generation), i(r.worst_recomputations), i(r.best_updates),
                          i(r.replacements), i(r.worst_encounters), i(r.worst_replacements),
                          Cell::num(trace.best_fitness[g], 6)});
    }
    return t;
}

} // namespace jayalab
