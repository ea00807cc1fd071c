#pragma once

#include <ostream>
#include <string>
#include <vector>

// Run reports for the CLI: one command execution produces named numeric
// results with a provenance label each, rendered as a table, JSON or CSV.
// All doubles are printed to 12 significant digits in every format, and
// the JSON key order is fixed, so equal runs give byte-equal output.

namespace furtool {

struct Param {
    std::string name;
    std::string text;  // already formatted
    bool numeric = false;
};

struct ResultEntry {
    std::string name;
    bool numeric = true;
    double value = 0.0;
    std::string text;  // used when numeric is false (e.g. exact fractions)
    std::string provenance;  // analytic | simulated | oracle
};

struct RunReport {
    std::string command;
    std::vector<Param> parameters;
    std::vector<ResultEntry> results;
    bool pass = true;
    double tolerance = 1e-9;

    void add_param(const std::string& name, long long v);
    void add_param(const std::string& name, const std::string& v);
    void add_number(const std::string& name, double v, const std::string& provenance);
    void add_text(const std::string& name, const std::string& v, const std::string& provenance);
};

enum class OutputFormat { kTable, kJson, kCsv };

std::string format_number(double v);
void render(const RunReport& report, OutputFormat format, std::ostream& os);

}  // namespace furtool
