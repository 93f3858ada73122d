#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "floorsums/claims.hpp"

namespace fsum {

using json = nlohmann::ordered_json;

// Document skeleton every command shares: tool name + version first.
json report_skeleton();

// Full document for one claim run. Findings are truncated to `max_listed`
// entries; finding_total always carries the exact count.
json claim_report_json(const ClaimReport& r, size_t max_listed = 200);

// Ad-hoc coverage scan document.
json scan_report_json(const std::string& problem, i64 lo, i64 hi,
                      const std::vector<i64>& gaps, double elapsed_seconds,
                      size_t max_listed = 200);

// Canonical rendering used for files and stdout; reports must round-trip
// (render -> parse -> render) byte-identically.
std::string render_report(const json& doc);

void write_text_file(const std::string& path, const std::string& text);

// Single-column gap dump, header "n".
std::string csv_gaps(const std::vector<i64>& gaps);

} // namespace fsum
