// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fails.
//
// usage: acceptance [path-to-fuzzyts-cli]

#include "fuzzyts/scenario.hpp"
#include "fuzzyts/theorems.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace fuzzyts;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.pass = false;
        o.detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (budget_s > 0 && secs > budget_s) {
        o.require(false, "runtime " + std::to_string(secs) + " s over budget " + std::to_string(budget_s) + " s");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << "  [" << timing << "]";
    if (!o.detail.empty()) {
        std::cout << "  -- " << o.detail;
    }
    std::cout << std::endl;
    if (!o.pass) {
        ++failures;
    }
}

std::string num(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << x;
    return os.str();
}

const FuzzyNumber k123 = FuzzyNumber::triangular(1, 2, 3);
const FuzzyNumber k012 = FuzzyNumber::triangular(0, 1, 2);

FuzzyFunctionExpr crisp_poly(std::vector<double> c)
{
    return FuzzyFunctionExpr::term(FuzzyNumber::crisp(1), CrispFn::poly(std::move(c)));
}

TimeScale segs(std::vector<Segment> s) { return TimeScale::from_intervals(s); }

void require_report(Outcome& o, const CheckReport& r, double tol, const std::string& label)
{
    o.require(!r.error, label + " raised " + r.error.value_or("") + " " + r.error_detail.value_or(""));
    o.require(!r.witnesses.empty(), label + " evaluated nothing");
    o.require(r.residual <= tol, label + " residual " + num(r.residual) + " > " + num(tol));
}

template <class Fn>
std::string error_of(Fn&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return std::string(e.name());
    }
    return "";
}

bool run_cli(const std::string& cli, std::string& out, int& rc)
{
    FILE* p = popen((cli + " verify --suite standard").c_str(), "r");
    if (!p) {
        return false;
    }
    std::array<char, 4096> buf{};
    out.clear();
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) {
        out.append(buf.data(), n);
    }
    const int status = pclose(p);
    rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    const NumericConfig cfg{};
    const auto& grid = kStandardAlphaGrid;

    criterion(1, "existence asymmetry of Delta and Nabla at 0", 1.0, [&] {
        Outcome o;
        const auto f = FuzzyFunctionExpr::term(k123, CrispFn::tsininv());
        const double s1 = std::sin(1.0);
        const TimeScale m = segs({{-3, -1}, {0, 2}});
        const double dn = hausdorff(nabla_gh(f, m, 0, cfg).value, FuzzyNumber::triangular(-3 * s1, -2 * s1, -s1));
        o.require(dn <= 1e-6, "nabla off by " + num(dn));
        o.require(error_of([&] { delta_gh(f, m, 0, cfg); }) == "NonConvergent", "delta did not fail NonConvergent");
        const TimeScale r = segs({{-3, 0}, {1, 2}});
        const double dd = hausdorff(delta_gh(f, r, 0, cfg).value, FuzzyNumber::triangular(s1, 2 * s1, 3 * s1));
        o.require(dd <= 1e-6, "mirrored delta off by " + num(dd));
        o.require(error_of([&] { nabla_gh(f, r, 0, cfg); }) == "NonConvergent",
                  "mirrored nabla did not fail NonConvergent");
        return o;
    });

    criterion(2, "gH kernel over 1000 seeded triangular pairs", 5.0, [&] {
        Outcome o;
        require_report(o, check_gh_kernel(1000, 20240611), 1e-12, "gh_kernel");
        return o;
    });

    criterion(3, "metric axioms over 1000 seeded triples", 0, [&] {
        Outcome o;
        require_report(o, check_metric_axioms(1000, 20240611), 1e-12, "metric_axioms");
        return o;
    });

    criterion(4, "one-step integrals match closed forms", 0, [&] {
        Outcome o;
        const auto f = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1, 0.25}));
        double worst = 0.0;
        int n = 0;
        for (const TimeScale& T : {segs({{0, 0}, {1, 1}, {3, 3}}), TimeScale::uniform(0, 5, 1)}) {
            for (double t : T.grid(T.min(), T.max(), 1.0)) {
                for (double a : grid) {
                    if (t < T.max()) {
                        const double s = T.sigma(t);
                        const FuzzyNumber closed = T.mu(t) * (a * f(t) + (1 - a) * f(s));
                        worst = std::max(worst, hausdorff(diamond_int_fuzzy(f, T, t, s, a, cfg).value, closed));
                        ++n;
                    }
                    if (t > T.min()) {
                        const double r = T.rho(t);
                        const FuzzyNumber closed = T.nu(t) * (a * f(r) + (1 - a) * f(t));
                        worst = std::max(worst, hausdorff(diamond_int_fuzzy(f, T, r, t, a, cfg).value, closed));
                        ++n;
                    }
                }
            }
        }
        o.require(n > 0, "no steps evaluated");
        o.require(worst <= 1e-12, "max level deviation " + num(worst));
        return o;
    });

    criterion(5, "integral linearity, additivity and metric inequality", 30.0, [&] {
        Outcome o;
        NumericConfig c = cfg;
        c.residual_tol = 1e-8;
        const auto f = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1}));
        const auto g = FuzzyFunctionExpr::term(k012, CrispFn::sin());
        require_report(o, check_integral_algebra(f, g, TimeScale::uniform(0, 5, 1), 0, 5, 2, 2, grid, c), 1e-8,
                       "discrete");
        require_report(o, check_integral_algebra(f, g, segs({{0, 1}}), 0, 1, 0.5, 2, grid, c), 1e-8, "continuous");
        require_report(o, check_integral_algebra(f, g, segs({{-3, -1}, {0, 2}}), -3, 2, -1, -1.5, grid, c), 1e-8,
                       "mixed");
        return o;
    });

    criterion(6, "fundamental theorem, homogeneous and quasi-regular", 0, [&] {
        Outcome o;
        NumericConfig c = cfg;
        c.residual_tol = 1e-9;
        const auto sq = crisp_poly({0, 0, 1});
        const TimeScale z = TimeScale::uniform(-1, 3, 1);
        const FtcResult h = check_ftc_homogeneous(sq, z, 0, 2, grid, c);
        require_report(o, h.report, 1e-12, "homogeneous");
        for (const auto& b : h.breakdowns) {
            const double dr = hausdorff(b.rhs, FuzzyNumber::crisp(4));
            const double dl = hausdorff(ftc_lhs(sq, z, 0, 2, b.alpha, c), FuzzyNumber::crisp(4));
            o.require(dr <= 1e-12 && dl <= 1e-12, "alpha " + num(b.alpha) + ": lhs/rhs not 4");
        }
        const TimeScale geo = TimeScale::geometric_two_sided(2, 0, 4);
        const FtcResult c1 = check_ftc_quasi_regular(sq, geo, -8, -2, grid, c);
        const FtcResult c2 = check_ftc_quasi_regular(sq, geo, 2, 8, grid, c);
        require_report(o, c1.report, 1e-9, "case 1");
        require_report(o, c2.report, 1e-9, "case 2");
        o.require(!c1.breakdowns.empty() && c1.breakdowns[0].ftc_case == 1, "window [-8,-2] not classed case 1");
        o.require(!c2.breakdowns.empty() && c2.breakdowns[0].ftc_case == 2, "window [2,8] not classed case 2");
        const TimeScale ratio = segs({{-3, -3}, {-2, -2}, {-1, -1}, {0, 0}, {2, 2}, {6, 6}, {14, 14}});
        const auto F = FuzzyFunctionExpr::term(k123, CrispFn::poly({4, 1, 0.05}));
        const FtcResult c3 = check_ftc_quasi_regular(F, ratio, -2, 6, grid, c);
        require_report(o, c3.report, 1e-9, "case 3");
        o.require(!c3.breakdowns.empty() && c3.breakdowns[0].ftc_case == 3, "straddling window not classed case 3");
        return o;
    });

    criterion(7, "derivative of the integral, corrected sign and negative control", 0, [&] {
        Outcome o;
        const TimeScale z = TimeScale::uniform(0, 5, 1);
        const auto h = crisp_poly({0, 1});
        require_report(o, check_derivative_of_integral(h, z, 0, {1, 2, 3, 4}, grid, cfg), 1e-9, "corrected");
        const double bad = hausdorff(integral_derivative_lhs(h, z, 0, 2, 0.5, cfg),
                                     integral_derivative_rhs(h, z, 2, 0.5, cfg, true));
        o.require(bad >= 0.5, "flipped sign residual only " + num(bad));
        return o;
    });

    criterion(8, "product rule and integration by parts", 0, [&] {
        Outcome o;
        const TimeScale z5 = TimeScale::uniform(0, 5, 1);
        const TimeScale z4 = TimeScale::uniform(0, 4, 1);
        const TimeScale geo = TimeScale::geometric_two_sided(2, 0, 4);
        const auto f = FuzzyFunctionExpr::term(k123, CrispFn::poly({0, 1}));
        const auto t = crisp_poly({0, 1});
        require_report(o, check_product_rule(f, t, z5, {1, 2, 3, 4}, grid, cfg), 1e-8, "product Z");
        require_report(o, check_product_rule(f, t, geo, {2, 4}, grid, cfg), 1e-8, "product geometric");
        require_report(o, check_integration_by_parts(t, FuzzyFunctionExpr::constant(k123), z4, 1, 3, grid, cfg), 1e-8,
                       "parts crisp x const");
        require_report(o, check_integration_by_parts(f, t, z4, 1, 3, grid, cfg), 1e-8, "parts fuzzy x crisp");
        require_report(o, check_integration_by_parts(f, t, geo, 2, 8, grid, cfg), 1e-8, "parts geometric");
        const auto eng = FuzzyFunctionExpr::sum({FuzzyFunctionExpr::term(FuzzyNumber::interval(-1, 1), CrispFn::poly({1, -1})),
                                                 FuzzyFunctionExpr::term(FuzzyNumber::triangular(-2, 0, 2), CrispFn::poly({0, 1}))});
        const CheckReport e = check_integration_by_parts(eng, t, z4, 1, 3, {0.5}, cfg);
        o.require(e.error.value_or("") == "GHDifferenceNotFuzzy", "engineered parts case gave " +
                                                                     e.error.value_or("a number"));
        o.require(error_of([&] { delta_gh(eng, z4, 0, cfg); }) == "GHDifferenceNotFuzzy",
                  "engineered derivative did not raise GHDifferenceNotFuzzy");
        return o;
    });

    criterion(9, "quadrature sanity", 0, [&] {
        Outcome o;
        const double a = delta_int_scalar([](double s) { return s; }, segs({{0, 1}}), 0, 1, cfg);
        o.require(std::abs(a - 0.5) <= 1e-9, "int_0^1 t = " + num(a));
        const double b = delta_int_scalar([](double) { return 1.0; }, segs({{0, 0}, {1, 2}}), 0, 2, cfg);
        o.require(std::abs(b - 2.0) <= 1e-9, "point + segment gave " + num(b));
        // [-3,-1] u [0,2]: 26/3 + gap 1 * (-1)^2 + 8/3
        const double c = delta_int_scalar([](double s) { return s * s; }, segs({{-3, -1}, {0, 2}}), -3, 2, cfg);
        o.require(std::abs(c - 37.0 / 3.0) <= 1e-9, "mixed decomposition gave " + num(c));
        require_report(o, check_quadrature_sanity(cfg), 1e-9, "quadrature_sanity");
        return o;
    });

    criterion(10, "standard suite deterministic and all-pass", 120.0, [&] {
        Outcome o;
        std::string x, y;
        int rx = -1, ry = -1;
        if (argc > 1) {
            o.require(run_cli(argv[1], x, rx) && run_cli(argv[1], y, ry), "could not launch CLI");
        } else {
            const RunOutput a = run_standard_suite({});
            const RunOutput b = run_standard_suite({});
            x = a.text, y = b.text, rx = a.exit_code, ry = b.exit_code;
        }
        o.require(rx == 0 && ry == 0, "exit codes " + std::to_string(rx) + ", " + std::to_string(ry));
        o.require(!x.empty() && x == y, "outputs differ between runs");
        const Json j = Json::parse(x, nullptr, false);
        o.require(j.is_array() && !j.empty(), "output is not a report array");
        if (j.is_array()) {
            for (const auto& r : j) {
                if (!r.value("pass", false)) {
                    o.require(false, "check " + r.value("name", std::string("?")) + " failed");
                }
            }
        }
        return o;
    });

    std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
