#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace fiscsim {

struct ReportRow {
    std::string label;
    std::vector<double> values;  // one per Report::columns entry
};

/**
 * One table plus provenance. The same report renders as CSV (6 significant
 * digits), JSON (full precision, stable key order, byte-deterministic for
 * identical inputs) or a Markdown table. `columns` hold machine-friendly
 * identifiers used by CSV and JSON; `pretty` holds the Markdown display
 * headings and falls back to `columns` when empty.
 */
struct Report {
    std::string command;
    std::vector<std::string> notes;
    std::string label_head = "label";
    std::vector<std::string> columns;
    std::vector<std::string> pretty;
    std::vector<ReportRow> rows;
    nlohmann::ordered_json inputs;  // echo of the calibration the run used
};

// Renders the report; format is one of csv, json, markdown.
// Throws ConfigError on an unsupported format.
std::string emit_report(const Report& r, const std::string& format);

}  // namespace fiscsim
