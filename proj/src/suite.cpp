#include "fuzzyts/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <string>

namespace fuzzyts {

namespace {

// Triangular numbers on a dyadic grid (multiples of 2^-10), so that level
// endpoints, sums and differences are exact in binary floating point.
class DyadicTriangles {
public:
    explicit DyadicTriangles(unsigned seed) : rng_(seed) {}

    FuzzyNumber next(int M = FuzzyNumber::kDefaultResolution)
    {
        std::uniform_int_distribution<int> centre(-8 * 1024, 8 * 1024);
        std::uniform_int_distribution<int> spread(0, 3 * 1024);
        const double a2 = centre(rng_) / 1024.0;
        const double a1 = a2 - spread(rng_) / 1024.0;
        const double a3 = a2 + spread(rng_) / 1024.0;
        return FuzzyNumber::triangular(a1, a2, a3, M);
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
};

double level_gap(const FuzzyNumber& u, const FuzzyNumber& v)
{
    double d = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        d = std::max({d, std::abs(u.level(j).lo - v.level(j).lo), std::abs(u.level(j).hi - v.level(j).hi)});
    }
    return d;
}

FuzzyFunctionExpr tri_term(double a1, double a2, double a3, CrispFn fn, int M)
{
    return FuzzyFunctionExpr::term(FuzzyNumber::triangular(a1, a2, a3, M), std::move(fn));
}

FuzzyFunctionExpr crisp_term(CrispFn fn, int M) { return FuzzyFunctionExpr::term(FuzzyNumber::crisp(1.0, M), std::move(fn)); }

std::vector<double> points_after(const std::vector<double>& pts, double t0, double gap)
{
    std::vector<double> out;
    for (double p : pts) {
        if (p >= t0 + gap) {
            out.push_back(p);
        }
    }
    return out;
}

CheckReport renamed(CheckReport r, std::string name)
{
    r.name = std::move(name);
    return r;
}

// Passes when evaluating `fn` raises `expected`.
CheckReport expect_error(std::string name, ErrorCode expected, const std::function<void()>& fn)
{
    CheckReport rep;
    rep.name = std::move(name);
    rep.tolerance = 0.0;
    try {
        fn();
        rep.record(0.0, 0.0, 1.0);
        rep.notes.push_back("no error raised; expected " + std::string(code_name(expected)));
    } catch (const Error& e) {
        rep.record(0.0, 0.0, e.code() == expected ? 0.0 : 1.0);
        rep.notes.push_back(std::string("raised ") + std::string(e.name()) + ": " + e.what());
    }
    return rep.finalize();
}

} // namespace

CheckReport check_gh_kernel(int samples, unsigned seed)
{
    CheckReport rep;
    rep.name = "gh_kernel";
    rep.tolerance = 1e-12;
    DyadicTriangles gen(seed);
    double self = 0.0, shift = 0.0, round_trip = 0.0, oracle = 0.0;
    int failures = 0;
    for (int i = 0; i < samples; ++i) {
        const FuzzyNumber u = gen.next();
        const FuzzyNumber v = gen.next();
        const FuzzyNumber zero = FuzzyNumber::crisp(0.0);
        self = std::max(self, level_gap(gh_diff(u, u), zero));
        shift = std::max(shift, level_gap(gh_diff(add(u, v), v), u));
        try {
            const FuzzyNumber w = gh_diff(u, v);
            for (std::size_t j = 0; j < w.size(); ++j) {
                const Interval& U = u.level(j);
                const Interval& V = v.level(j);
                const Interval& W = w.level(j);
                // Brute force over the two defining cases.
                const double d1 = U.lo - V.lo;
                const double d2 = U.hi - V.hi;
                const Interval expected = d1 <= d2 ? Interval{d1, d2} : Interval{d2, d1};
                oracle = std::max({oracle, std::abs(W.lo - expected.lo), std::abs(W.hi - expected.hi)});
                if (d1 <= d2) { // u = v + w
                    round_trip = std::max({round_trip, std::abs(V.lo + W.lo - U.lo), std::abs(V.hi + W.hi - U.hi)});
                } else { // v = u + (-1) w
                    round_trip = std::max({round_trip, std::abs(U.lo - W.hi - V.lo), std::abs(U.hi - W.lo - V.hi)});
                }
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::GHDifferenceNotFuzzy) {
                throw;
            }
            ++failures;
        }
    }
    // u (-) u must be exactly zero; the others are held to the tolerance.
    rep.record(0, 0, self == 0.0 ? 0.0 : std::max(self, 1.0));
    rep.record(1, 0, shift);
    rep.record(2, 0, round_trip);
    rep.record(3, 0, oracle == 0.0 ? 0.0 : std::max(oracle, 1.0));
    rep.notes.push_back(std::to_string(samples) + " pairs, " + std::to_string(failures) +
                        " without a fuzzy gH difference");
    return rep.finalize();
}

CheckReport check_metric_axioms(int samples, unsigned seed)
{
    CheckReport rep;
    rep.name = "metric_axioms";
    rep.tolerance = 1e-12;
    DyadicTriangles gen(seed);
    double translation = 0.0, homogeneity = 0.0, subadd = 0.0;
    for (int i = 0; i < samples; ++i) {
        const FuzzyNumber a = gen.next();
        const FuzzyNumber b = gen.next();
        const FuzzyNumber c = gen.next();
        const FuzzyNumber d = gen.next();
        const double m = gen.real(-5.0, 5.0);
        translation = std::max(translation, std::abs(hausdorff(add(a, c), add(b, c)) - hausdorff(a, b)));
        homogeneity = std::max(homogeneity, std::abs(hausdorff(scalar_mul(m, a), scalar_mul(m, b)) -
                                                     std::abs(m) * hausdorff(a, b)));
        subadd = std::max(subadd, hausdorff(add(a, b), add(c, d)) - hausdorff(a, c) - hausdorff(b, d));
    }
    rep.record(0, 0, translation == 0.0 ? 0.0 : std::max(translation, 1.0)); // exact
    rep.record(1, 0, homogeneity);
    rep.record(2, 0, std::max(0.0, subadd));
    return rep.finalize();
}

CheckReport check_local_steps(const FuzzyFn& f, const TimeScale& T, const std::vector<double>& alpha_grid,
                              const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "one_step_integrals";
    rep.tolerance = 1e-12;
    for (double p : select_test_points(T)) {
        for (double alpha : alpha_grid) {
            try {
                const LocalSteps ls = local_step_integrals(f, T, p, alpha, cfg);
                const double s = T.sigma(p);
                const double r = T.rho(p);
                const FuzzyNumber fwd = scalar_mul(s - p, add(scalar_mul(alpha, f(p)), scalar_mul(1.0 - alpha, f(s))));
                const FuzzyNumber bwd = scalar_mul(p - r, add(scalar_mul(alpha, f(r)), scalar_mul(1.0 - alpha, f(p))));
                rep.record(p, alpha, std::max(level_gap(ls.forward, fwd), level_gap(ls.backward, bwd)));
            } catch (const Error& e) {
                rep.fail_with(std::string(e.name()), e.what());
                return rep.finalize();
            }
        }
    }
    return rep.finalize();
}

CheckReport check_quadrature_sanity(const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "quadrature_sanity";
    rep.tolerance = 1e-9;
    const std::vector<Segment> unit = {{0, 1}};
    const std::vector<Segment> gap_then_segment = {{0, 0}, {1, 2}};
    const TimeScale U = TimeScale::from_intervals(unit);
    const TimeScale G = TimeScale::from_intervals(gap_then_segment);
    const TimeScale Z = TimeScale::uniform(0, 2, 1);
    auto id = [](double t) { return t; };
    auto one = [](double) { return 1.0; };
    rep.record(1, 1, std::abs(delta_int_scalar(id, U, 0, 1, cfg) - 0.5));
    rep.record(2, 1, std::abs(delta_int_scalar(one, G, 0, 2, cfg) - 2.0));
    rep.record(2, 0, std::abs(nabla_int_scalar(one, G, 0, 2, cfg) - 2.0));
    rep.record(2, 1, std::abs(delta_int_scalar(id, Z, 0, 2, cfg) - 1.0));
    rep.record(2, 0, std::abs(nabla_int_scalar(id, Z, 0, 2, cfg) - 3.0));
    for (double alpha : kStandardAlphaGrid) {
        auto g = [alpha](double t) { return 2.0 * t + 2.0 * alpha - 1.0; };
        rep.record(2, alpha, std::abs(diamond_int_scalar(g, Z, 0, 2, alpha, cfg) - 4.0));
    }
    return rep.finalize();
}

std::vector<double> select_test_points(const TimeScale& T)
{
    std::vector<double> out;
    const auto& segs = T.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i];
        if (s.degenerate()) {
            out.push_back(s.lo);
            continue;
        }
        if (i > 0) {
            out.push_back(s.lo); // left-scattered
        }
        for (int k = 1; k <= 5; ++k) {
            out.push_back(s.lo + s.length() * k / 6.0);
        }
        if (i + 1 < segs.size()) {
            out.push_back(s.hi); // right-scattered
        }
    }
    std::vector<double> kept;
    for (double p : out) {
        if (T.in_kappa_both(p)) {
            kept.push_back(p);
        }
    }
    return kept;
}

std::vector<CheckReport> standard_suite(const NumericConfig& cfg)
{
    const int M = cfg.level_resolution;
    const auto& grid = kStandardAlphaGrid;

    const TimeScale Z05 = TimeScale::uniform(0, 5, 1);
    const TimeScale Zm13 = TimeScale::uniform(-1, 3, 1);
    const TimeScale Z04 = TimeScale::uniform(0, 4, 1);
    const TimeScale Zsym = TimeScale::uniform(-3, 3, 1);
    const std::vector<Segment> s013 = {{0, 0}, {1, 1}, {3, 3}};
    const TimeScale T013 = TimeScale::from_intervals(s013);
    const std::vector<Segment> unit = {{0, 1}};
    const TimeScale U01 = TimeScale::from_intervals(unit);
    const std::vector<Segment> s02 = {{0, 2}};
    const TimeScale U02 = TimeScale::from_intervals(s02);
    const std::vector<Segment> mixed = {{-3, -1}, {0, 2}};
    const TimeScale Mix = TimeScale::from_intervals(mixed);
    const TimeScale Geo = TimeScale::geometric_two_sided(2.0, 0, 4);
    const std::vector<Segment> ratio = {{-3, -3}, {-2, -2}, {-1, -1}, {0, 0}, {2, 2}, {6, 6}, {14, 14}};
    const TimeScale Ratio = TimeScale::from_intervals(ratio);
    const std::vector<Segment> s1248 = {{1, 1}, {2, 2}, {4, 4}, {8, 8}};
    const TimeScale T1248 = TimeScale::from_intervals(s1248);

    const FuzzyFunctionExpr lin = tri_term(1, 2, 3, CrispFn::poly({0, 1}), M);       // (1,2,3) t
    const FuzzyFunctionExpr quad = tri_term(1, 2, 3, CrispFn::poly({0, 0, 1}), M);   // (1,2,3) t^2
    const FuzzyFunctionExpr wave = tri_term(0, 1, 2, CrispFn::sin(1, 0), M);         // (0,1,2) sin t
    const FuzzyFunctionExpr shifted = tri_term(1, 2, 3, CrispFn::poly({4, 1}), M);   // (1,2,3)(t+4)
    const FuzzyFunctionExpr growth = tri_term(0, 1, 2, CrispFn::exp(1), M);      // (0,1,2) e^t
    const FuzzyFunctionExpr rising = tri_term(1, 2, 3, CrispFn::poly({4, 1, 0.05}), M); // positive, increasing on [-3,14]
    const FuzzyFunctionExpr t_crisp = crisp_term(CrispFn::poly({0, 1}), M);
    const FuzzyFunctionExpr t2_crisp = crisp_term(CrispFn::poly({0, 0, 1}), M);
    const FuzzyFunctionExpr one_two_three = FuzzyFunctionExpr::constant(FuzzyNumber::triangular(1, 2, 3, M));
    const FuzzyFunctionExpr engineered = FuzzyFunctionExpr::sum(
        {FuzzyFunctionExpr::term(FuzzyNumber::interval(-1, 1, M), CrispFn::poly({1, -1})),
         FuzzyFunctionExpr::term(FuzzyNumber::triangular(-2, 0, 2, M), CrispFn::poly({0, 1}))});

    using Job = std::function<CheckReport()>;
    std::vector<Job> jobs = {
        [&] { return check_existence_asymmetry(cfg); },
        [&] { return check_gh_kernel(1000, 20240611u); },
        [&] { return check_metric_axioms(1000, 20240612u); },
        [&] { return renamed(check_local_steps(lin, T013, grid, cfg), "one_step_integrals/{0,1,3}"); },
        [&] { return renamed(check_local_steps(lin, Z05, grid, cfg), "one_step_integrals/Z[0,5]"); },
        [&] { return check_quadrature_sanity(cfg); },
        [&] {
            return renamed(check_integral_algebra(lin, wave, Z05, 0, 5, 2, 2.0, grid, cfg),
                           "integral_algebra/Z[0,5]");
        },
        [&] {
            return renamed(check_integral_algebra(lin, wave, U01, 0, 1, 0.5, 2.0, grid, cfg),
                           "integral_algebra/[0,1]");
        },
        [&] {
            return renamed(check_integral_algebra(lin, wave, Mix, -3, 2, -1, -1.5, grid, cfg),
                           "integral_algebra/[-3,-1]u[0,2]");
        },
        [&] {
            return renamed(check_ftc_homogeneous(t2_crisp, Zm13, 0, 2, grid, cfg).report,
                           "ftc_homogeneous/Z[-1,3]");
        },
        [&] {
            return renamed(check_ftc_homogeneous(quad, Z04, 1, 3, grid, cfg).report, "ftc_homogeneous/fuzzy_Z[0,4]");
        },
        [&] {
            return renamed(check_ftc_homogeneous(quad, U01, 0, 1, grid, cfg).report, "ftc_homogeneous/[0,1]");
        },
        [&] {
            return renamed(check_ftc_quasi_regular(t2_crisp, Geo, -8, -2, grid, cfg).report,
                           "ftc_quasi_regular/geometric_negative");
        },
        [&] {
            return renamed(check_ftc_quasi_regular(t2_crisp, Geo, 2, 8, grid, cfg).report,
                           "ftc_quasi_regular/geometric_positive");
        },
        [&] {
            return renamed(check_ftc_quasi_regular(quad, Geo, 2, 8, grid, cfg).report,
                           "ftc_quasi_regular/geometric_positive_fuzzy");
        },
        [&] {
            return renamed(check_ftc_quasi_regular(t2_crisp, Zsym, -2, 2, grid, cfg).report,
                           "ftc_quasi_regular/straddling_Z[-3,3]");
        },
        [&] {
            return renamed(check_ftc_quasi_regular(t2_crisp, Ratio, -2, 6, grid, cfg).report,
                           "ftc_quasi_regular/straddling_mixed_ratio");
        },
        [&] {
            return renamed(check_ftc_quasi_regular(rising, Ratio, -2, 6, grid, cfg).report,
                           "ftc_quasi_regular/straddling_mixed_ratio_fuzzy");
        },
        [&] {
            return renamed(check_derivative_of_integral(t_crisp, Z05, 0, {1, 2, 3, 4}, grid, cfg),
                           "derivative_of_integral/Z[0,5]");
        },
        [&] {
            return renamed(check_derivative_of_integral(t2_crisp, U02, 0, {0.5, 1, 1.5, 2}, grid, cfg),
                           "derivative_of_integral/[0,2]");
        },
        [&] {
            return renamed(check_derivative_of_integral(shifted, Mix, -3, points_after(select_test_points(Mix), -3,
                                                                                        cfg.h0),
                                                        grid, cfg),
                           "derivative_of_integral/[-3,-1]u[0,2]");
        },
        [&] {
            CheckReport rep;
            rep.name = "derivative_of_integral/flipped_sign_control";
            rep.tolerance = 0.0;
            const double r = hausdorff(integral_derivative_lhs(t_crisp, Z05, 0, 2, 0.5, cfg),
                                       integral_derivative_rhs(t_crisp, Z05, 2, 0.5, cfg, true));
            rep.record(2, 0.5, std::max(0.0, 0.5 - r));
            rep.notes.push_back("alpha(alpha-1) correction leaves residual " + std::to_string(r) +
                                " (must be >= 0.5)");
            return rep.finalize();
        },
        [&] {
            return renamed(check_product_rule(lin, t_crisp, Z05, {1, 2, 3, 4}, grid, cfg), "product_rule/Z[0,5]");
        },
        [&] {
            return renamed(check_product_rule(lin, t_crisp, Geo, {2, 4, 8}, grid, cfg),
                           "product_rule/geometric");
        },
        [&] {
            return renamed(check_product_rule(lin, t_crisp, U02, {0.5, 1, 1.5}, grid, cfg), "product_rule/[0,2]");
        },
        [&] {
            return renamed(check_integration_by_parts(t_crisp, one_two_three, Z04, 1, 3, grid, cfg),
                           "integration_by_parts/t_times_const");
        },
        [&] {
            return renamed(check_integration_by_parts(lin, t_crisp, Z04, 1, 3, grid, cfg),
                           "integration_by_parts/fuzzy_t_times_t");
        },
        [&] {
            return renamed(check_integration_by_parts(lin, t_crisp, Geo, 2, 8, grid, cfg),
                           "integration_by_parts/geometric_positive");
        },
        [&] {
            const FuzzyFunctionExpr one = FuzzyFunctionExpr::constant(FuzzyNumber::crisp(1.0, M));
            return expect_error("integration_by_parts/engineered_gh_failure", ErrorCode::GHDifferenceNotFuzzy,
                                [&] { integration_by_parts_sides(engineered, one, Z04, 1, 3, 0.5, cfg); });
        },
        [&] {
            return expect_error("derivative/engineered_gh_failure", ErrorCode::GHDifferenceNotFuzzy,
                                [&] { delta_gh(engineered, Z04, 0, cfg); });
        },
        [&] {
            return renamed(check_diamond_consequences(quad, Mix, select_test_points(Mix), cfg),
                           "diamond_consequences/[-3,-1]u[0,2]");
        },
        [&] {
            return renamed(check_diamond_consequences(wave, U01, select_test_points(U01), cfg),
                           "diamond_consequences/[0,1]");
        },
        [&] {
            return renamed(check_sum_scalar_rules(shifted, growth, 2.5, Mix, select_test_points(Mix), grid, cfg),
                           "sum_scalar_rules/[-3,-1]u[0,2]");
        },
        [&] {
            return renamed(check_sum_scalar_rules(quad, lin, 0.5, Z05, {1, 2, 3, 4}, grid, cfg),
                           "sum_scalar_rules/Z[0,5]");
        },
        [&] {
            CheckReport rep;
            rep.name = "jump_identities";
            rep.tolerance = 1e-12;
            const CrispFn sq = CrispFn::poly({0, 0, 1});
            const CrispFn cubic = CrispFn::poly({1, -2, 0, 1});
            for (const auto& [T, pts] : std::vector<std::pair<TimeScale, std::vector<double>>>{
                     {T1248, {2, 4}}, {Z05, {1, 2, 3, 4}}, {Geo, {-8, -4, -2, -1, 1, 2, 4, 8}}}) {
                for (double p : pts) {
                    for (const CrispFn* g : {&sq, &cubic}) {
                        CheckReport one = check_jump_identity(*g, T, p, cfg);
                        rep.record(p, 0, one.residual);
                    }
                    rep.record(p, 0, std::abs(T.nabla_sigma(p) * T.delta_rho(p) - 1.0));
                }
            }
            return rep.finalize();
        },
    };

    std::vector<std::future<CheckReport>> running;
    running.reserve(jobs.size());
    for (auto& job : jobs) {
        running.push_back(std::async(std::launch::async, [&job] {
            try {
                return job();
            } catch (const Error& e) {
                CheckReport rep;
                rep.name = "unnamed";
                rep.fail_with(std::string(e.name()), e.what());
                return rep.finalize();
            }
        }));
    }
    std::vector<CheckReport> reports;
    for (auto& r : running) {
        reports.push_back(r.get());
    }
    std::stable_sort(reports.begin(), reports.end(),
                     [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
    return reports;
}

std::vector<PlotCurve> standard_plots(const NumericConfig& cfg)
{
    const int M = cfg.level_resolution;
    std::vector<PlotCurve> out;
    auto sample = [&](std::string name, const TimeScale& T, const FuzzyFn& f, double h) {
        PlotCurve c{std::move(name), T.grid(T.min(), T.max(), h), {}};
        for (double t : c.t) {
            c.values.push_back(f(t));
        }
        out.push_back(std::move(c));
    };
    const std::vector<Segment> mixed = {{-3, -1}, {0, 2}};
    sample("tsininv_on_mixed", TimeScale::from_intervals(mixed),
           tri_term(1, 2, 3, CrispFn::tsininv(), M), 0.05);
    sample("quadratic_on_Z04", TimeScale::uniform(0, 4, 1), tri_term(1, 2, 3, CrispFn::poly({0, 0, 1}), M), 1.0);
    sample("geometric_quadratic", TimeScale::geometric_two_sided(2.0, 0, 4),
           tri_term(1, 2, 3, CrispFn::poly({0, 0, 1}), M), 1.0);
    return out;
}

} // namespace fuzzyts
