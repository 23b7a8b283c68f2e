#include "tnl/report.hpp"

#include <json.hpp>

namespace tnl {

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Differs: return "differs";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

bool ValidationReport::passed() const {
    for (const auto& c : checks)
        if (c.normative && c.verdict == Verdict::Fail) return false;
    return true;
}

namespace {

nlohmann::ordered_json values(const NamedValues& v) {
    auto out = nlohmann::ordered_json::object();
    for (const auto& [k, x] : v) out[k] = x;
    return out;
}

}  // namespace

std::string to_json(const ValidationReport& report, int indent) {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = std::string(kToolVersion);
    auto input = values(report.inputs);
    for (const auto& [k, v] : report.input_flags) input[k] = v;
    j["input"] = input;
    j["passed"] = report.passed();

    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json r;
        r["name"] = c.name;
        r["oracle"] = c.oracle;
        r["variant"] = c.variant;
        r["normative"] = c.normative;
        r["verdict"] = std::string(to_string(c.verdict));
        r["metrics"] = values(c.metrics);
        r["tolerances"] = values(c.tolerances);
        if (!c.note.empty()) r["note"] = c.note;
        checks.push_back(std::move(r));
    }
    j["checks"] = std::move(checks);

    auto tables = nlohmann::ordered_json::array();
    for (const auto& t : report.tables) {
        nlohmann::ordered_json r;
        r["name"] = t.name;
        r["columns"] = t.columns;
        r["rows"] = t.rows;
        tables.push_back(std::move(r));
    }
    j["convergence_tables"] = std::move(tables);
    return j.dump(indent);
}

}  // namespace tnl
