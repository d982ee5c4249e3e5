#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace parryseq {

/// One comparison against a golden value. `source` is "published" (the
/// value is printed in the source material) or "derived" (independent
/// computation).
struct Check {
    std::string label;
    std::string expected;
    std::string produced;
    std::string source;
    bool pass = false;
};

struct ExperimentReport {
    std::string name;
    std::string title;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<Check> checks;
    /// Optional data table (e.g. the rows of a figure).
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    /// A finding is reported but never fails the run.
    bool finding = false;
    bool pass = false;
    double seconds = 0;
};

struct ExperimentInfo {
    std::string name;
    std::string title;
    bool finding = false;
};

const std::vector<ExperimentInfo>& experiment_registry();

/// Throws InvalidInput for unknown names.
ExperimentReport run_experiment(const std::string& name);

/// Reports in the order of `names`; with `parallel` the experiments run
/// concurrently but the result order is unchanged.
std::vector<ExperimentReport> run_experiments(const std::vector<std::string>& names, bool parallel);

/// The embedded golden fixture.
const nlohmann::json& golden_values();

/// Deterministic text (runtime excluded).
std::string render_report(const ExperimentReport& report);
nlohmann::json report_to_json(const ExperimentReport& report, bool include_runtime = false);
/// The data table as CSV (header row first).
std::string report_table_csv(const ExperimentReport& report);

}  // namespace parryseq
