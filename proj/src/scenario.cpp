#include "fuzzyts/scenario.hpp"

#include "fuzzyts/calculus.hpp"
#include "fuzzyts/integral.hpp"
#include "fuzzyts/theorems.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fuzzyts {

namespace {

[[noreturn]] void schema(const std::string& msg) { raise(ErrorCode::SchemaError, msg); }

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        schema(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

double number(const Json& j, const char* what)
{
    if (!j.is_number()) {
        schema(std::string(what) + " must be a number");
    }
    return j.get<double>();
}

int integer(const Json& j, const char* what)
{
    if (!j.is_number_integer()) {
        schema(std::string(what) + " must be an integer");
    }
    return j.get<int>();
}

std::vector<double> numbers(const Json& j, const char* what)
{
    if (!j.is_array()) {
        schema(std::string(what) + " must be an array of numbers");
    }
    std::vector<double> out;
    for (const auto& x : j) {
        out.push_back(number(x, what));
    }
    return out;
}

// Single-key object {"kind": body}.
std::pair<std::string, const Json*> tagged(const Json& j, const char* what)
{
    if (!j.is_object() || j.size() != 1) {
        schema(std::string(what) + " must be an object with exactly one key");
    }
    return {j.begin().key(), &j.begin().value()};
}

std::string fmt17(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Json error_json(const Error& e)
{
    return {{"error", std::string(e.name())}, {"message", e.what()}};
}

RunOutput render_error(const Error& e)
{
    return {e.code() == ErrorCode::SchemaError ? 2 : 1, error_json(e).dump(2) + "\n"};
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Json derivative_json(const DerivativeResult& d)
{
    return {{"levels", level_table(d.value)},
            {"kind", derivative_kind_name(d.kind)},
            {"gh_case", gh_case_name(d.gh_case)}};
}

template <class Fn>
Json attempt(Fn&& fn)
{
    try {
        return derivative_json(fn());
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SchemaError) {
            throw;
        }
        return error_json(e);
    }
}

struct Context {
    TimeScale T;
    NumericConfig cfg;
    std::vector<double> alpha_grid;
    double alpha;
    std::string format;
};

Context make_context(const Json& sc, const RunOptions& opts)
{
    NumericConfig cfg;
    if (sc.contains("config")) {
        cfg = config_from_json(sc.at("config"), cfg);
    }
    if (opts.levels) {
        cfg.level_resolution = *opts.levels;
    }
    if (opts.tol) {
        cfg.residual_tol = *opts.tol;
    }
    cfg.validate();
    std::vector<double> grid = kStandardAlphaGrid;
    if (sc.contains("alpha_grid")) {
        grid = numbers(sc.at("alpha_grid"), "alpha_grid");
    }
    if (opts.alpha_grid) {
        grid = *opts.alpha_grid;
    }
    double alpha = 0.5;
    if (sc.contains("alpha")) {
        alpha = number(sc.at("alpha"), "alpha");
    }
    if (opts.alpha) {
        alpha = *opts.alpha;
    }
    for (double a : grid) {
        if (!(a >= 0.0 && a <= 1.0)) {
            raise(ErrorCode::AlphaOutOfRange, "alpha grid value " + fmt17(a));
        }
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        raise(ErrorCode::AlphaOutOfRange, "alpha=" + fmt17(alpha));
    }
    std::string format = "json";
    if (sc.contains("format")) {
        if (!sc.at("format").is_string()) {
            schema("format must be a string");
        }
        format = sc.at("format").get<std::string>();
    }
    if (opts.format) {
        format = *opts.format;
    }
    if (format != "json" && format != "csv") {
        schema("format must be json or csv");
    }
    return {timescale_from_json(field(sc, "timescale")), cfg, grid, alpha, format};
}

std::vector<double> points_in(const Json& sc, const TimeScale& T)
{
    std::vector<double> pts = numbers(field(sc, "points"), "points");
    for (double& p : pts) {
        p = T.snap(p); // PointNotInScale before any computation
    }
    return pts;
}

RunOutput run_derive(const Json& sc, const Context& ctx)
{
    const FuzzyFunctionExpr f = expr_from_json(field(sc, "function"), ctx.cfg.level_resolution);
    const auto pts = points_in(sc, ctx.T);
    Json out = Json::array();
    std::ostringstream csv;
    csv << "point,alpha,r,lo,hi\n";
    for (double p : pts) {
        Json rec;
        rec["point"] = p;
        rec["class"] = kind_name(ctx.T.classify(p).kind);
        rec["alpha"] = ctx.alpha;
        try {
            const DerivativeResult d = diamond_alpha_gh(f, ctx.T, p, ctx.alpha, ctx.cfg);
            rec["levels"] = level_table(d.value);
            rec["kind"] = derivative_kind_name(d.kind);
            rec["gh_case"] = gh_case_name(d.gh_case);
            for (std::size_t j = 0; j < d.value.size(); ++j) {
                csv << fmt17(p) << ',' << fmt17(ctx.alpha) << ',' << fmt17(d.value.grade(j)) << ','
                    << fmt17(d.value.level(j).lo) << ',' << fmt17(d.value.level(j).hi) << '\n';
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::SchemaError) {
                throw;
            }
            rec["error"] = std::string(e.name());
            rec["message"] = e.what();
        }
        rec["delta"] = attempt([&] { return delta_gh(f, ctx.T, p, ctx.cfg); });
        rec["nabla"] = attempt([&] { return nabla_gh(f, ctx.T, p, ctx.cfg); });
        out.push_back(std::move(rec));
    }
    return {0, ctx.format == "csv" ? csv.str() : out.dump(2) + "\n"};
}

RunOutput run_integrate(const Json& sc, const Context& ctx)
{
    const FuzzyFunctionExpr f = expr_from_json(field(sc, "function"), ctx.cfg.level_resolution);
    const double a = ctx.T.snap(number(field(sc, "a"), "a"));
    const double b = ctx.T.snap(number(field(sc, "b"), "b"));
    const FuzzyIntegralResult r = diamond_int_fuzzy(f, ctx.T, a, b, ctx.alpha, ctx.cfg);
    if (ctx.format == "csv") {
        return {0, level_csv(r.value)};
    }
    Json out = {{"a", a}, {"b", b}, {"alpha", ctx.alpha}, {"levels", level_table(r.value)}};
    return {0, out.dump(2) + "\n"};
}

RunOutput run_local_steps(const Json& sc, const Context& ctx)
{
    const FuzzyFunctionExpr f = expr_from_json(field(sc, "function"), ctx.cfg.level_resolution);
    Json out = Json::array();
    std::ostringstream csv;
    csv << "point,alpha,side,r,lo,hi\n";
    for (double p : points_in(sc, ctx.T)) {
        const LocalSteps ls = local_step_integrals(f, ctx.T, p, ctx.alpha, ctx.cfg);
        out.push_back({{"point", p},
                       {"alpha", ctx.alpha},
                       {"forward", level_table(ls.forward)},
                       {"backward", level_table(ls.backward)}});
        for (const auto& [side, u] : {std::pair<const char*, const FuzzyNumber*>{"forward", &ls.forward},
                                      std::pair<const char*, const FuzzyNumber*>{"backward", &ls.backward}}) {
            for (std::size_t j = 0; j < u->size(); ++j) {
                csv << fmt17(p) << ',' << fmt17(ctx.alpha) << ',' << side << ',' << fmt17(u->grade(j)) << ','
                    << fmt17(u->level(j).lo) << ',' << fmt17(u->level(j).hi) << '\n';
            }
        }
    }
    return {0, ctx.format == "csv" ? csv.str() : out.dump(2) + "\n"};
}

std::string optional_name(const Json& chk, const std::string& fallback)
{
    if (chk.contains("name")) {
        if (!chk.at("name").is_string()) {
            schema("check name must be a string");
        }
        return chk.at("name").get<std::string>();
    }
    return fallback;
}

CheckReport run_check(const Json& chk, const Context& ctx)
{
    const int M = ctx.cfg.level_resolution;
    const std::string kind = field(chk, "check").is_string() ? chk.at("check").get<std::string>() : "";
    auto expr = [&](const char* key) { return expr_from_json(field(chk, key), M); };
    auto num = [&](const char* key) { return number(field(chk, key), key); };
    auto pts = [&](const char* key) {
        return chk.contains(key) ? numbers(chk.at(key), key) : select_test_points(ctx.T);
    };
    const auto& T = ctx.T;
    const auto& cfg = ctx.cfg;
    const auto& grid = ctx.alpha_grid;
    CheckReport rep;
    if (kind == "ftc_quasi_regular") {
        rep = check_ftc_quasi_regular(expr("F"), T, num("a"), num("b"), grid, cfg).report;
    } else if (kind == "ftc_homogeneous") {
        rep = check_ftc_homogeneous(expr("F"), T, num("a"), num("b"), grid, cfg).report;
    } else if (kind == "derivative_of_integral") {
        rep = check_derivative_of_integral(expr("h"), T, num("t0"), numbers(field(chk, "points"), "points"), grid,
                                           cfg);
    } else if (kind == "integration_by_parts") {
        rep = check_integration_by_parts(expr("f"), expr("g"), T, num("a"), num("b"), grid, cfg);
    } else if (kind == "product_rule") {
        rep = check_product_rule(expr("f"), expr("g"), T, pts("points"), grid, cfg);
    } else if (kind == "integral_algebra") {
        rep = check_integral_algebra(expr("f"), expr("g"), T, num("a"), num("b"), num("m"), num("k"), grid, cfg);
    } else if (kind == "one_step_integrals") {
        rep = check_local_steps(expr("f"), T, grid, cfg);
    } else if (kind == "diamond_consequences") {
        rep = check_diamond_consequences(expr("f"), T, pts("points"), cfg);
    } else if (kind == "sum_scalar_rules") {
        rep = check_sum_scalar_rules(expr("f"), expr("g"), num("c"), T, pts("points"), grid, cfg);
    } else if (kind == "jump_identities") {
        const CrispFn g = crisp_from_json(field(chk, "g"));
        rep.name = "jump_identities";
        rep.tolerance = cfg.residual_tol;
        for (double p : numbers(field(chk, "points"), "points")) {
            rep.record(p, 0.0, check_jump_identity(g, T, p, cfg).residual);
        }
        rep.finalize();
    } else if (kind == "existence_asymmetry") {
        rep = check_existence_asymmetry(cfg);
    } else if (kind == "gh_kernel") {
        rep = check_gh_kernel(chk.contains("samples") ? integer(chk.at("samples"), "samples") : 1000,
                              chk.contains("seed") ? static_cast<unsigned>(integer(chk.at("seed"), "seed")) : 1u);
    } else if (kind == "metric_axioms") {
        rep = check_metric_axioms(chk.contains("samples") ? integer(chk.at("samples"), "samples") : 1000,
                                  chk.contains("seed") ? static_cast<unsigned>(integer(chk.at("seed"), "seed")) : 1u);
    } else if (kind == "quadrature_sanity") {
        rep = check_quadrature_sanity(cfg);
    } else {
        schema("unknown check '" + kind + "'");
    }
    rep.name = optional_name(chk, rep.name);
    return rep;
}

void write_curve(const std::filesystem::path& dir, const std::string& name, const std::vector<double>& ts,
                 const std::vector<FuzzyNumber>& values)
{
    std::filesystem::create_directories(dir);
    std::string safe = name;
    for (char& c : safe) {
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) {
            c = '_';
        }
    }
    std::ofstream os(dir / (safe + ".csv"));
    os << "t,r,lo,hi\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        for (std::size_t j = 0; j < values[i].size(); ++j) {
            os << fmt17(ts[i]) << ',' << fmt17(values[i].grade(j)) << ',' << fmt17(values[i].level(j).lo) << ','
               << fmt17(values[i].level(j).hi) << '\n';
        }
    }
}

RunOutput render_reports(const std::vector<CheckReport>& reports, const std::string& format)
{
    bool all = true;
    Json out = Json::array();
    std::ostringstream csv;
    csv << "name,residual,tolerance,pass\n";
    for (const auto& r : reports) {
        all = all && r.pass;
        out.push_back(report_to_json(r));
        csv << r.name << ',' << fmt17(r.residual) << ',' << fmt17(r.tolerance) << ',' << (r.pass ? 1 : 0) << '\n';
    }
    return {all ? 0 : 1, format == "csv" ? csv.str() : out.dump(2) + "\n"};
}

RunOutput run_verify(const Json& sc, const Context& ctx, const RunOptions& opts)
{
    const Json& checks = field(sc, "checks");
    if (!checks.is_array()) {
        schema("checks must be an array");
    }
    std::vector<CheckReport> reports;
    for (const auto& chk : checks) {
        reports.push_back(run_check(chk, ctx));
    }
    if (opts.emit_plots) {
        const double span = ctx.T.max() - ctx.T.min();
        const auto ts = ctx.T.grid(ctx.T.min(), ctx.T.max(), span > 0 ? span / 200.0 : 1.0);
        int i = 0;
        for (const auto& chk : checks) {
            for (const char* key : {"F", "f", "g", "h"}) {
                if (chk.contains(key)) {
                    const FuzzyFunctionExpr fn = expr_from_json(chk.at(key), ctx.cfg.level_resolution);
                    std::vector<FuzzyNumber> vals;
                    for (double t : ts) {
                        vals.push_back(fn(t));
                    }
                    write_curve(*opts.emit_plots, std::to_string(i) + "_" + reports[i].name + "_" + key, ts, vals);
                }
            }
            ++i;
        }
    }
    return render_reports(reports, ctx.format);
}

} // namespace

// ---- time scales -------------------------------------------------------------

TimeScale timescale_from_json(const Json& j)
{
    auto [kind, body] = tagged(j, "timescale");
    if (kind == "segments") {
        if (!body->is_array()) {
            schema("segments must be an array of [lo, hi]");
        }
        std::vector<std::pair<double, double>> iv;
        for (const auto& s : *body) {
            if (!s.is_array() || s.size() != 2) {
                schema("each segment must be [lo, hi]");
            }
            iv.emplace_back(number(s[0], "segment lo"), number(s[1], "segment hi"));
        }
        return make_timescale(iv);
    }
    if (kind == "uniform") {
        return TimeScale::uniform(number(field(*body, "a"), "a"), number(field(*body, "b"), "b"),
                                  number(field(*body, "step"), "step"));
    }
    if (kind == "geometric_two_sided") {
        return TimeScale::geometric_two_sided(number(field(*body, "q"), "q"), integer(field(*body, "k_min"), "k_min"),
                                              integer(field(*body, "k_max"), "k_max"));
    }
    schema("unknown timescale kind '" + kind + "'");
}

Json timescale_to_json(const TimeScale& T)
{
    Json segs = Json::array();
    for (const auto& s : T.segments()) {
        segs.push_back({s.lo, s.hi});
    }
    return {{"segments", segs}};
}

// ---- fuzzy numbers -----------------------------------------------------------

FuzzyNumber fuzzy_from_json(const Json& j, int M)
{
    auto [kind, body] = tagged(j, "fuzzy number");
    if (kind == "triangular") {
        const auto v = numbers(*body, "triangular");
        if (v.size() != 3) {
            schema("triangular needs three numbers");
        }
        return FuzzyNumber::triangular(v[0], v[1], v[2], M);
    }
    if (kind == "crisp") {
        return FuzzyNumber::crisp(number(*body, "crisp"), M);
    }
    if (kind == "interval") {
        const auto v = numbers(*body, "interval");
        if (v.size() != 2) {
            schema("interval needs two numbers");
        }
        if (v[0] > v[1]) {
            raise(ErrorCode::InvalidInterval, "interval lo > hi");
        }
        return FuzzyNumber::interval(v[0], v[1], M);
    }
    if (kind == "levels") {
        if (!body->is_array() || body->size() < 2) {
            schema("levels must be an array of at least two [lo, hi] entries");
        }
        std::vector<Interval> levels;
        for (const auto& lv : *body) {
            if (!lv.is_array() || (lv.size() != 2 && lv.size() != 3)) {
                schema("each level must be [lo, hi] or [r, lo, hi]");
            }
            const std::size_t o = lv.size() - 2;
            levels.push_back({number(lv[o], "level lo"), number(lv[o + 1], "level hi")});
        }
        FuzzyNumber u = FuzzyNumber::from_levels(std::move(levels));
        return u.resolution() == M ? u : u.resampled(M);
    }
    schema("unknown fuzzy number kind '" + kind + "'");
}

Json level_table(const FuzzyNumber& u)
{
    Json t = Json::array();
    for (std::size_t j = 0; j < u.size(); ++j) {
        t.push_back({u.grade(j), u.level(j).lo, u.level(j).hi});
    }
    return t;
}

Json fuzzy_to_json(const FuzzyNumber& u) { return {{"levels", level_table(u)}}; }

std::string level_csv(const FuzzyNumber& u)
{
    std::ostringstream os;
    os << "r,lo,hi\n";
    for (std::size_t j = 0; j < u.size(); ++j) {
        os << fmt17(u.grade(j)) << ',' << fmt17(u.level(j).lo) << ',' << fmt17(u.level(j).hi) << '\n';
    }
    return os.str();
}

// ---- expressions -------------------------------------------------------------

CrispFn crisp_from_json(const Json& j)
{
    auto [kind, body] = tagged(j, "fn");
    auto opt = [&](const char* key, double dflt) {
        return body->is_object() && body->contains(key) ? number(body->at(key), key) : dflt;
    };
    if (kind == "poly") {
        return CrispFn::poly(numbers(*body, "poly"));
    }
    if (!body->is_object()) {
        schema("fn '" + kind + "' takes an object");
    }
    if (kind == "sin") {
        return CrispFn::sin(opt("a", 1.0), opt("b", 0.0));
    }
    if (kind == "cos") {
        return CrispFn::cos(opt("a", 1.0), opt("b", 0.0));
    }
    if (kind == "exp") {
        return CrispFn::exp(opt("a", 1.0));
    }
    if (kind == "tsininv") {
        return CrispFn::tsininv();
    }
    schema("unknown fn '" + kind + "'");
}

Json crisp_to_json(const CrispFn& g)
{
    return std::visit(overloaded{
                          [](const Poly& p) { return Json{{"poly", p.coeffs}}; },
                          [](const Sin& s) { return Json{{"sin", {{"a", s.a}, {"b", s.b}}}}; },
                          [](const Cos& c) { return Json{{"cos", {{"a", c.a}, {"b", c.b}}}}; },
                          [](const Exp& e) { return Json{{"exp", {{"a", e.a}}}}; },
                          [](const TSinInv&) { return Json{{"tsininv", Json::object()}}; },
                      },
                      g.repr());
}

FuzzyFunctionExpr expr_from_json(const Json& j, int M)
{
    auto [kind, body] = tagged(j, "expression");
    if (kind == "const") {
        return FuzzyFunctionExpr::constant(fuzzy_from_json(*body, M));
    }
    if (kind == "term") {
        return FuzzyFunctionExpr::term(fuzzy_from_json(field(*body, "coef"), M), crisp_from_json(field(*body, "fn")));
    }
    if (kind == "sum") {
        if (!body->is_array() || body->empty()) {
            schema("sum needs a non-empty array");
        }
        std::vector<FuzzyFunctionExpr> parts;
        for (const auto& p : *body) {
            parts.push_back(expr_from_json(p, M));
        }
        return FuzzyFunctionExpr::sum(std::move(parts));
    }
    if (kind == "prod") {
        if (!body->is_array() || body->size() != 2) {
            schema("prod needs exactly two factors");
        }
        return FuzzyFunctionExpr::prod(expr_from_json((*body)[0], M), expr_from_json((*body)[1], M));
    }
    schema("unknown expression '" + kind + "'");
}

Json expr_to_json(const FuzzyFunctionExpr& f)
{
    return std::visit(overloaded{
                          [](const ConstNode& c) { return Json{{"const", fuzzy_to_json(c.value)}}; },
                          [](const TermNode& t) {
                              return Json{{"term", {{"coef", fuzzy_to_json(t.coef)}, {"fn", crisp_to_json(t.fn)}}}};
                          },
                          [](const SumNode& s) {
                              Json parts = Json::array();
                              for (const auto& p : s.parts) {
                                  parts.push_back(expr_to_json(p));
                              }
                              return Json{{"sum", parts}};
                          },
                          [](const ProdNode& p) {
                              return Json{{"prod", {expr_to_json(p.left), expr_to_json(p.right)}}};
                          },
                      },
                      f.node().value);
}

// ---- config and reports ------------------------------------------------------

NumericConfig config_from_json(const Json& j, NumericConfig cfg)
{
    if (!j.is_object()) {
        schema("config must be an object");
    }
    for (const auto& [key, v] : j.items()) {
        if (key == "limit_tol") {
            cfg.limit_tol = number(v, "limit_tol");
        } else if (key == "max_refinements") {
            cfg.max_refinements = integer(v, "max_refinements");
        } else if (key == "h0") {
            cfg.h0 = number(v, "h0");
        } else if (key == "level_resolution") {
            cfg.level_resolution = integer(v, "level_resolution");
        } else if (key == "quad_tol") {
            cfg.quad_tol = number(v, "quad_tol");
        } else if (key == "quad_max_depth") {
            cfg.quad_max_depth = integer(v, "quad_max_depth");
        } else if (key == "residual_tol") {
            cfg.residual_tol = number(v, "residual_tol");
        } else {
            schema("unknown config key '" + key + "'");
        }
    }
    cfg.validate();
    return cfg;
}

Json config_to_json(const NumericConfig& c)
{
    return {{"limit_tol", c.limit_tol},        {"max_refinements", c.max_refinements},
            {"h0", c.h0},                      {"level_resolution", c.level_resolution},
            {"quad_tol", c.quad_tol},          {"quad_max_depth", c.quad_max_depth},
            {"residual_tol", c.residual_tol}};
}

Json report_to_json(const CheckReport& r)
{
    Json w = Json::array();
    for (const auto& x : r.witnesses) {
        w.push_back({{"point", x.point}, {"alpha", x.alpha}, {"residual", x.residual}});
    }
    Json out = {{"name", r.name},   {"residual", r.residual}, {"tolerance", r.tolerance},
                {"pass", r.pass},   {"witnesses", w},        {"notes", r.notes}};
    if (r.error) {
        out["error"] = *r.error;
        out["message"] = r.error_detail.value_or("");
    }
    return out;
}

// ---- dispatch ----------------------------------------------------------------

std::vector<double> parse_alpha_grid(const std::string& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (item.find_first_not_of(" \t", used) != std::string::npos) {
                schema("bad alpha grid entry '" + item + "'");
            }
        } catch (const std::logic_error&) {
            schema("bad alpha grid entry '" + item + "'");
        }
    }
    if (out.empty()) {
        schema("alpha grid is empty");
    }
    return out;
}

RunOutput run_scenario(const Json& sc, const std::string& operation, const RunOptions& opts)
{
    try {
        try {
            if (!sc.is_object()) {
                schema("scenario must be a JSON object");
            }
            if (sc.contains("operation") && sc.at("operation") != operation) {
                schema("scenario declares operation '" + sc.at("operation").dump() + "' but '" + operation +
                       "' was requested");
            }
            const Context ctx = make_context(sc, opts);
            if (operation == "derive") {
                return run_derive(sc, ctx);
            }
            if (operation == "integrate") {
                return run_integrate(sc, ctx);
            }
            if (operation == "local-steps") {
                return run_local_steps(sc, ctx);
            }
            if (operation == "verify") {
                return run_verify(sc, ctx, opts);
            }
            schema("unknown operation '" + operation + "'");
        } catch (const nlohmann::json::exception& e) {
            schema(e.what());
        }
    } catch (const Error& e) {
        return render_error(e);
    }
}

RunOutput run_standard_suite(const RunOptions& opts)
{
    try {
        NumericConfig cfg;
        if (opts.levels) {
            cfg.level_resolution = *opts.levels;
        }
        if (opts.tol) {
            cfg.residual_tol = *opts.tol;
        }
        cfg.validate();
        const std::string format = opts.format.value_or("json");
        if (format != "json" && format != "csv") {
            schema("format must be json or csv");
        }
        if (opts.emit_plots) {
            for (const auto& c : standard_plots(cfg)) {
                write_curve(*opts.emit_plots, c.name, c.t, c.values);
            }
        }
        return render_reports(standard_suite(cfg), format);
    } catch (const Error& e) {
        return render_error(e);
    }
}

} // namespace fuzzyts
