#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <iomanip>

namespace furtool {

void RunReport::add_param(const std::string& name, long long v) {
    parameters.push_back(Param{name, std::to_string(v), true});
}

void RunReport::add_param(const std::string& name, const std::string& v) {
    parameters.push_back(Param{name, v, false});
}

void RunReport::add_number(const std::string& name, double v, const std::string& provenance) {
    ResultEntry e;
    e.name = name;
    e.value = v;
    e.provenance = provenance;
    results.push_back(std::move(e));
}

void RunReport::add_text(const std::string& name, const std::string& v,
                         const std::string& provenance) {
    ResultEntry e;
    e.name = name;
    e.numeric = false;
    e.text = v;
    e.provenance = provenance;
    results.push_back(std::move(e));
}

std::string format_number(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    return out;
}

void render_json(const RunReport& r, std::ostream& os) {
    os << "{\"command\":\"" << json_escape(r.command) << "\",\"parameters\":{";
    for (std::size_t i = 0; i < r.parameters.size(); ++i) {
        const Param& p = r.parameters[i];
        if (i) os << ",";
        os << "\"" << json_escape(p.name) << "\":";
        if (p.numeric)
            os << p.text;
        else
            os << "\"" << json_escape(p.text) << "\"";
    }
    os << "},\"results\":[";
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        const ResultEntry& e = r.results[i];
        if (i) os << ",";
        os << "{\"name\":\"" << json_escape(e.name) << "\",\"value\":";
        if (e.numeric)
            os << format_number(e.value);
        else
            os << "\"" << json_escape(e.text) << "\"";
        os << ",\"provenance\":\"" << json_escape(e.provenance) << "\"}";
    }
    os << "],\"pass\":" << (r.pass ? "true" : "false")
       << ",\"tolerance\":" << format_number(r.tolerance) << "}\n";
}

void render_csv(const RunReport& r, std::ostream& os) {
    os << "# command: " << r.command << "\n";
    for (const Param& p : r.parameters) os << "# " << p.name << "=" << p.text << "\n";
    os << "name,value,provenance\n";
    for (const ResultEntry& e : r.results)
        os << e.name << "," << (e.numeric ? format_number(e.value) : e.text) << ","
           << e.provenance << "\n";
    os << "pass," << (r.pass ? 1 : 0) << ",\n";
    os << "tolerance," << format_number(r.tolerance) << ",\n";
}

void render_table(const RunReport& r, std::ostream& os) {
    os << "command: " << r.command << "\n";
    os << "parameters:";
    for (const Param& p : r.parameters) os << " " << p.name << "=" << p.text;
    os << "\n";
    std::size_t width = 4;
    for (const ResultEntry& e : r.results) width = std::max(width, e.name.size());
    for (const ResultEntry& e : r.results) {
        os << "  " << std::left << std::setw(static_cast<int>(width) + 2) << e.name
           << (e.numeric ? format_number(e.value) : e.text) << "  [" << e.provenance << "]\n";
    }
    os << "tolerance: " << format_number(r.tolerance) << "\n";
    os << (r.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace

void render(const RunReport& report, OutputFormat format, std::ostream& os) {
    switch (format) {
        case OutputFormat::kJson: render_json(report, os); break;
        case OutputFormat::kCsv: render_csv(report, os); break;
        case OutputFormat::kTable: render_table(report, os); break;
    }
}

}  // namespace furtool
