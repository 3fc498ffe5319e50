#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jayalab/cost_model.hpp"
#include "jayalab/experiments.hpp"

namespace jayalab {

// A table cell. Numbers keep full precision for CSV and are rounded to
// `digits` decimals for Markdown.
struct Cell {
    std::string text;
    std::optional<double> number;
    int digits = 6;

    static Cell str(std::string s) { return {std::move(s), std::nullopt, 0}; }
    static Cell num(double v, int digits = 6) { return {{}, v, digits}; }
    static Cell integer(long long v) { return {std::to_string(v), std::nullopt, 0}; }
    static Cell missing() { return {"---", std::nullopt, 0}; }
    static Cell opt(const std::optional<double>& v, int digits = 6)
    {
        return v ? num(*v, digits) : missing();
    }
};

struct Table {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class OutputFormat { csv, markdown };

OutputFormat parse_format(const std::string& name);

// CSV: header line, one line per row, numbers in shortest round-trip form.
void write_csv(std::ostream& os, const Table& table);
// Markdown: optional "### title", pipe table, numbers rounded.
void write_markdown(std::ostream& os, const Table& table);
void write_table(std::ostream& os, const Table& table, OutputFormat format);

// Shortest decimal string that parses back to exactly v.
std::string format_full(double v);
std::string format_fixed(double v, int digits);

Table ensemble_summary_table(const std::vector<EnsembleReport>& reports);
Table ensemble_generation_table(const EnsembleReport& report);
// Rows and columns labelled n..1 (descending).
Table transition_matrix_table(const TransitionEstimate& est);
Table initial_distribution_table(const TransitionEstimate& est);
Table cost_breakdown_table(const CostBreakdown& breakdown);

// Same columns as write_trace_csv.
Table trace_table(const RunTrace& trace, std::size_t run_id);

} // namespace jayalab
