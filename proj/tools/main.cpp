#include "fuzzyts/scenario.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace fuzzyts;

namespace {

RunOutput load_and_run(const std::string& path, const std::string& op, const RunOptions& opts)
{
    std::ifstream in(path);
    if (!in) {
        Json err = {{"error", "SchemaError"}, {"message", "cannot open scenario file " + path}};
        return {2, err.dump(2) + "\n"};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    Json sc = Json::parse(buf.str(), nullptr, false);
    if (sc.is_discarded()) {
        Json err = {{"error", "SchemaError"}, {"message", "scenario file is not valid JSON"}};
        return {2, err.dump(2) + "\n"};
    }
    return run_scenario(sc, op, opts);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fuzzy calculus on time scales"};
    app.require_subcommand(1);

    int levels = 0;
    double alpha = 0.0;
    double tol = 0.0;
    std::string alpha_grid, format, plots;
    auto* o_levels = app.add_option("--levels", levels, "level resolution M")->envname("FUZZYTS_LEVELS");
    auto* o_alpha = app.add_option("--alpha", alpha, "diamond-alpha weight")->envname("FUZZYTS_ALPHA");
    auto* o_grid = app.add_option("--alpha-grid", alpha_grid, "comma separated alpha values")
                       ->envname("FUZZYTS_ALPHA_GRID");
    auto* o_format = app.add_option("--format", format, "json or csv")
                         ->envname("FUZZYTS_FORMAT")
                         ->check(CLI::IsMember({"json", "csv"}));
    auto* o_plots = app.add_option("--emit-plots", plots, "directory for CSV curves")->envname("FUZZYTS_EMIT_PLOTS");
    auto* o_tol = app.add_option("--tol", tol, "verdict tolerance for checks")->envname("FUZZYTS_TOL");

    std::string path, suite;
    const std::pair<const char*, const char*> subs[] = {
        {"derive", "diamond-alpha, delta and nabla gH derivatives at points"},
        {"integrate", "diamond-alpha fuzzy integral over [a, b]"},
        {"local-steps", "one-step integrals over [t, sigma t] and [rho t, t]"},
    };
    for (const auto& [name, help] : subs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("scenario", path, "scenario JSON file")->required();
        sub->fallthrough();
    }
    auto* verify = app.add_subcommand("verify", "run verification checks, exit 0 iff all pass");
    auto* o_suite = verify->add_option("--suite", suite, "built-in suite")->check(CLI::IsMember({"standard"}));
    verify->add_option("scenario", path, "scenario JSON file")->excludes(o_suite);
    verify->fallthrough();

    try {
        app.parse(argc, argv);
        if (verify->parsed() && suite.empty() && path.empty()) {
            throw CLI::RequiredError("--suite or a scenario file");
        }
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    RunOptions opts;
    try {
        if (*o_levels) opts.levels = levels;
        if (*o_alpha) opts.alpha = alpha;
        if (*o_grid) opts.alpha_grid = parse_alpha_grid(alpha_grid);
        if (*o_format) opts.format = format;
        if (*o_plots) opts.emit_plots = plots;
        if (*o_tol) opts.tol = tol;
    } catch (const Error& e) {
        std::cout << Json{{"error", std::string(e.name())}, {"message", e.what()}}.dump(2) << "\n";
        return 2;
    }

    RunOutput out;
    if (verify->parsed() && !suite.empty()) {
        out = run_standard_suite(opts);
    } else {
        out = load_and_run(path, app.get_subcommands().front()->get_name(), opts);
    }
    std::cout << out.text << std::flush;
    return out.exit_code;
}
