#include "floorsums/report.hpp"

#include <fstream>

namespace fsum {

json report_skeleton() {
    json j;
    j["tool"] = "floorsums";
    j["version"] = "0.1.0";
    return j;
}

namespace {

json truncated_list(const std::vector<i64>& v, size_t max_listed) {
    json arr = json::array();
    size_t n = v.size() < max_listed ? v.size() : max_listed;
    for (size_t i = 0; i < n; ++i) arr.push_back(v[i]);
    return arr;
}

json witness_obj(const Witness& w) {
    json o = json::object();
    for (const auto& [var, val] : w) o[var] = val;
    return o;
}

} // namespace

json claim_report_json(const ClaimReport& r, size_t max_listed) {
    json j = report_skeleton();
    j["claim"] = r.id;
    j["category"] = category_name(r.category);
    j["kind"] = kind_name(r.kind);
    j["range"] = {{"lo", r.lo}, {"hi", r.hi}};
    if (r.kind == ClaimKind::Search && r.bound > 0) j["bound"] = r.bound;
    j["expected"] = {{"kind", expectation_name(r.expected)},
                     {"values", r.expected_values}};
    j["finding_label"] = r.finding_label;
    j["ok"] = r.ok;
    j["verdict"] = verdict_name(r.verdict);
    j["finding_total"] = r.findings.size();
    j["findings"] = truncated_list(r.findings, max_listed);
    if (r.findings.size() > max_listed) j["findings_truncated"] = true;
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    if (!r.witnesses.empty()) {
        json ws = json::array();
        for (const auto& [pos, w] : r.witnesses)
            ws.push_back({{"n", pos}, {"witness", witness_obj(w)}});
        j["witnesses"] = ws;
    }
    j["checkpoint_cursor"] = r.checkpoint_cursor;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

json scan_report_json(const std::string& problem, i64 lo, i64 hi,
                      const std::vector<i64>& gaps, double elapsed_seconds,
                      size_t max_listed) {
    json j = report_skeleton();
    j["problem"] = problem;
    j["range"] = {{"lo", lo}, {"hi", hi}};
    j["gap_total"] = gaps.size();
    j["gaps"] = truncated_list(gaps, max_listed);
    if (gaps.size() > max_listed) j["gaps_truncated"] = true;
    if (gaps.empty())
        j["first_gap"] = nullptr;
    else
        j["first_gap"] = gaps.front();
    j["elapsed_seconds"] = elapsed_seconds;
    return j;
}

std::string render_report(const json& doc) { return doc.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::trunc);
    if (!out.good()) throw Error("cannot open for writing: " + path);
    out << text;
    if (!out.good()) throw Error("write failed: " + path);
}

std::string csv_gaps(const std::vector<i64>& gaps) {
    std::string s = "n\n";
    for (i64 g : gaps) s += std::to_string(g) + "\n";
    return s;
}

} // namespace fsum
