#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tnl {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Verdict { Pass, Fail, Differs, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

using NamedValues = std::vector<std::pair<std::string, double>>;

/// One check: what was compared, against which oracle, the numbers, the
/// tolerances, and the verdict those numbers imply.
struct CheckRecord {
    std::string name;
    std::string oracle;
    std::string variant;
    bool normative = true;  // non-normative checks never fail the run
    NamedValues metrics;
    NamedValues tolerances;
    Verdict verdict = Verdict::Inconclusive;
    std::string note;
};

struct ConvergenceTable {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct ValidationReport {
    NamedValues inputs;
    std::vector<std::pair<std::string, std::string>> input_flags;
    std::vector<CheckRecord> checks;
    std::vector<ConvergenceTable> tables;

    /// True when no normative check failed.
    bool passed() const;
};

std::string to_json(const ValidationReport& report, int indent = 2);

}  // namespace tnl
