#include "fiscsim/report.hpp"

#include <cstdio>
#include <sstream>

#include "fiscsim/errors.hpp"

namespace fiscsim {

using nlohmann::ordered_json;

namespace {

// -0.0 would leak the sign of an exact zero into reports; canonicalize it.
double canonical(double v) { return v == 0.0 ? 0.0 : v; }

std::string six_digits(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", canonical(v));
    return buf;
}

std::string emit_csv(const Report& r) {
    std::ostringstream os;
    os << "# command: " << r.command << "\n";
    for (const std::string& note : r.notes) os << "# " << note << "\n";
    os << r.label_head;
    for (const std::string& c : r.columns) os << "," << c;
    os << "\n";
    for (const ReportRow& row : r.rows) {
        os << row.label;
        for (double v : row.values) os << "," << six_digits(v);
        os << "\n";
    }
    return os.str();
}

std::string emit_json(const Report& r) {
    ordered_json doc;
    doc["command"] = r.command;
    doc["notes"] = r.notes;
    doc["inputs"] = r.inputs.is_null() ? ordered_json::object() : r.inputs;
    ordered_json cols = ordered_json::array();
    cols.push_back(r.label_head);
    for (const std::string& c : r.columns) cols.push_back(c);
    doc["columns"] = std::move(cols);
    ordered_json rows = ordered_json::array();
    for (const ReportRow& row : r.rows) {
        ordered_json values = ordered_json::object();
        for (std::size_t i = 0; i < r.columns.size() && i < row.values.size(); ++i)
            values[r.columns[i]] = canonical(row.values[i]);
        rows.push_back({{"label", row.label}, {"values", std::move(values)}});
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

std::string emit_markdown(const Report& r) {
    const std::vector<std::string>& heads = r.pretty.empty() ? r.columns : r.pretty;
    std::ostringstream os;
    os << "# " << r.command << "\n\n";
    for (const std::string& note : r.notes) os << "_" << note << "_\n";
    if (!r.notes.empty()) os << "\n";
    os << "| " << r.label_head;
    for (const std::string& h : heads) os << " | " << h;
    os << " |\n|";
    for (std::size_t i = 0; i < heads.size() + 1; ++i) os << " --- |";
    os << "\n";
    for (const ReportRow& row : r.rows) {
        os << "| " << row.label;
        for (double v : row.values) os << " | " << six_digits(v);
        os << " |\n";
    }
    return os.str();
}

}  // namespace

std::string emit_report(const Report& r, const std::string& format) {
    if (format == "csv") return emit_csv(r);
    if (format == "json") return emit_json(r);
    if (format == "markdown") return emit_markdown(r);
    throw ConfigError("unsupported output format: " + format);
}

}  // namespace fiscsim
