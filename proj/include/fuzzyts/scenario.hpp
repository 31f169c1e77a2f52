#ifndef FUZZYTS_SCENARIO_HPP
#define FUZZYTS_SCENARIO_HPP

#include "fuzzyts/config.hpp"
#include "fuzzyts/funcspec.hpp"
#include "fuzzyts/fuzzy.hpp"
#include "fuzzyts/report.hpp"
#include "fuzzyts/timescale.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fuzzyts {

using Json = nlohmann::json;

// Parsers throw SchemaError on malformed input; domain validation (e.g.
// lo > hi, unsorted triangular) keeps its own error code.
TimeScale timescale_from_json(const Json& j);
Json timescale_to_json(const TimeScale& T);

// {"triangular":[a1,a2,a3]}, {"levels":[[lo,hi],...]} (or [[r,lo,hi],...]),
// {"crisp":x}, {"interval":[lo,hi]}. Level lists of another length are
// resampled to resolution M.
FuzzyNumber fuzzy_from_json(const Json& j, int M);
Json level_table(const FuzzyNumber& u); // [[r, lo, hi], ...]
Json fuzzy_to_json(const FuzzyNumber& u); // {"levels": level_table}
std::string level_csv(const FuzzyNumber& u); // header r,lo,hi

CrispFn crisp_from_json(const Json& j);
Json crisp_to_json(const CrispFn& g);
FuzzyFunctionExpr expr_from_json(const Json& j, int M);
Json expr_to_json(const FuzzyFunctionExpr& f);

NumericConfig config_from_json(const Json& j, NumericConfig base);
Json config_to_json(const NumericConfig& cfg);

Json report_to_json(const CheckReport& r);

// Command-line overrides; unset fields leave the scenario's values alone.
struct RunOptions {
    std::optional<int> levels;
    std::optional<double> alpha;
    std::optional<std::vector<double>> alpha_grid;
    std::optional<std::string> format; // "json" | "csv"
    std::optional<std::string> emit_plots;
    std::optional<double> tol;
};

struct RunOutput {
    int exit_code = 0;
    std::string text;
};

// operation: "derive", "integrate", "verify", "local-steps". Exit codes:
// 0 success, 1 domain error or failed verification, 2 SchemaError.
RunOutput run_scenario(const Json& scenario, const std::string& operation, const RunOptions& opts);
RunOutput run_standard_suite(const RunOptions& opts);

std::vector<double> parse_alpha_grid(const std::string& text);

} // namespace fuzzyts

#endif
