#include "fuzzyts/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fuzzyts {

namespace {

std::string where(double t, double alpha)
{
    return "t=" + std::to_string(t) + ", alpha=" + std::to_string(alpha);
}

FuzzyNumber zero_like(const FuzzyNumber& u) { return FuzzyNumber::crisp(0.0, u.resolution()); }

// base +/- inc, level by level (endpoint roles kept).
FuzzyNumber levelwise_offset(const FuzzyNumber& base, const FuzzyNumber& inc, double sign)
{
    std::vector<Interval> levels(base.size());
    for (std::size_t j = 0; j < levels.size(); ++j) {
        levels[j] = {base.level(j).lo + sign * inc.level(j).lo, base.level(j).hi + sign * inc.level(j).hi};
    }
    return FuzzyNumber::from_levels_tolerant(std::move(levels), kResultFuzzyTol, ErrorCode::ResultNotFuzzy);
}

// Re-raise with the failing sub-expression named.
template <class Fn>
auto named(const std::string& what, Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const Error& e) {
        raise(e.code(), what + ": " + e.what());
    }
}

double smallest_nonnegative_point(const TimeScale& T)
{
    for (const auto& s : T.segments()) {
        if (s.hi >= 0.0) {
            return std::max(s.lo, 0.0);
        }
    }
    raise(ErrorCode::InvalidBounds, "time scale has no non-negative point");
}

// Value used for the left (right) neighbour term: the jump value on a
// scattered side, the one-sided limit on an accumulating side, and the
// opposite side's value at a dense boundary point.
FuzzyNumber side_value(const FuzzyFn& h, const TimeScale& T, double x, Side side, const NumericConfig& cfg)
{
    const PointClass pc = T.classify(x);
    const bool scattered = side == Side::Left ? pc.left_scattered() : pc.right_scattered();
    const bool accumulates = side == Side::Left ? pc.left_accumulates() : pc.right_accumulates();
    if (scattered) {
        return h(side == Side::Left ? T.rho(x) : T.sigma(x));
    }
    if (accumulates) {
        return one_sided_limit(h, x, side, cfg, std::min(cfg.h0, T.dense_room(x, side)));
    }
    const Side other = side == Side::Left ? Side::Right : Side::Left;
    const bool other_acc = other == Side::Left ? pc.left_accumulates() : pc.right_accumulates();
    if (other_acc) {
        return one_sided_limit(h, x, other, cfg, std::min(cfg.h0, T.dense_room(x, other)));
    }
    return h(x);
}

} // namespace

// ---- derivative of the integral ------------------------------------------

FuzzyNumber integral_derivative_lhs(const FuzzyFn& h, const TimeScale& T, double t0, double t, double alpha,
                                    const NumericConfig& cfg)
{
    const double x = T.snap(t);
    const FuzzyNumber Fx = diamond_int_fuzzy(h, T, t0, x, alpha, cfg).value;
    FuzzyFn F = [&](double s) {
        if (s == x) {
            return Fx;
        }
        if (s > x) {
            return levelwise_offset(Fx, diamond_int_fuzzy(h, T, x, s, alpha, cfg).value, 1.0);
        }
        return levelwise_offset(Fx, diamond_int_fuzzy(h, T, s, x, alpha, cfg).value, -1.0);
    };
    return diamond_alpha_gh(F, T, x, alpha, cfg).value;
}

FuzzyNumber integral_derivative_rhs(const FuzzyFn& h, const TimeScale& T, double t, double alpha,
                                    const NumericConfig& cfg, bool flipped_sign)
{
    const double x = T.snap(t);
    const FuzzyNumber hx = h(x);
    const double w = 1.0 - 2.0 * alpha + 2.0 * alpha * alpha;
    const double q = (flipped_sign ? -1.0 : 1.0) * alpha * (1.0 - alpha);
    if (q == 0.0) {
        return scalar_mul(w, hx);
    }
    const FuzzyNumber C = add(side_value(h, T, x, Side::Left, cfg), side_value(h, T, x, Side::Right, cfg));
    return add(scalar_mul(w, hx), scalar_mul(q, C));
}

CheckReport check_derivative_of_integral(const FuzzyFn& h, const TimeScale& T, double t0,
                                         const std::vector<double>& points, const std::vector<double>& alpha_grid,
                                         const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "derivative_of_integral";
    rep.tolerance = cfg.residual_tol;
    double flipped = 0.0;
    for (double p : points) {
        for (double a : alpha_grid) {
            try {
                const FuzzyNumber lhs = integral_derivative_lhs(h, T, t0, p, a, cfg);
                rep.record(p, a, hausdorff(lhs, integral_derivative_rhs(h, T, p, a, cfg)));
                flipped = std::max(flipped, hausdorff(lhs, integral_derivative_rhs(h, T, p, a, cfg, true)));
            } catch (const Error& e) {
                rep.fail_with(std::string(e.name()), where(p, a) + ": " + e.what());
                return rep.finalize();
            }
        }
    }
    rep.notes.push_back("correction term enters with +alpha(1-alpha); the alpha(alpha-1) variant leaves residual " +
                        std::to_string(flipped));
    return rep.finalize();
}

// ---- fundamental theorem ---------------------------------------------------

FuzzyNumber ftc_lhs(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha, const NumericConfig& cfg)
{
    FuzzyFn integrand = [&](double t) { return diamond_alpha_gh(F, T, t, alpha, cfg).value; };
    return diamond_int_fuzzy(integrand, T, a, b, alpha, cfg).value;
}

NablaSigmaScan scan_nabla_sigma(const TimeScale& T, double a, double b)
{
    if (!T.is_quasi_regular()) {
        raise(ErrorCode::NotQuasiRegular, "time scale is not quasi-regular");
    }
    const double x = T.snap(a);
    const double y = T.snap(b);
    const double step = y > x ? (y - x) / 16.0 : 1.0;
    NablaSigmaScan scan;
    auto same = [](double u, double v) { return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(u)); };
    for (double t : T.grid(x, y, step)) {
        double r;
        try {
            r = T.nabla_sigma(t);
        } catch (const Error& e) {
            raise(ErrorCode::NablaSigmaNotPiecewiseConstant, e.what());
        }
        double& m = t < 0.0 ? scan.m1 : scan.m2;
        bool& seen = t < 0.0 ? scan.has_negative : scan.has_nonnegative;
        if (!seen) {
            m = r;
            seen = true;
        } else if (!same(m, r)) {
            raise(ErrorCode::NablaSigmaNotPiecewiseConstant,
                  "nabla sigma takes values " + std::to_string(m) + " and " + std::to_string(r) + " on the " +
                      (t < 0.0 ? "negative" : "non-negative") + " side");
        }
    }
    return scan;
}

FtcBreakdown ftc_rhs_quasi_regular(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha)
{
    const double x = T.snap(a);
    const double y = T.snap(b);
    if (x > y) {
        raise(ErrorCode::InvalidBounds, "need a <= b");
    }
    if (!T.in_kappa_both(x) || !T.in_kappa_both(y)) {
        raise(ErrorCode::PointNotInKappa, "endpoints must lie in T^kappa_kappa");
    }
    const NablaSigmaScan scan = scan_nabla_sigma(T, x, y);
    const double w = alpha * alpha + (1.0 - alpha) * (1.0 - alpha);
    const double q = alpha * (1.0 - alpha);

    FtcBreakdown bd;
    bd.alpha = alpha;
    bd.m1 = scan.m1;
    bd.m2 = scan.m2;
    const FuzzyNumber Fx = F(x);
    const FuzzyNumber Fy = F(y);
    bd.main_term = scalar_mul(w, gh_diff(Fy, Fx));
    bd.h_alpha = zero_like(Fx);
    auto bar = [&](double hi, double lo) { return gh_diff(F(hi), F(lo)); };

    if (y < 0.0 || x >= 0.0) {
        bd.ftc_case = y < 0.0 ? 1 : 2;
        const double m = y < 0.0 ? scan.m1 : scan.m2;
        if (q != 0.0) {
            bd.h_alpha = scalar_mul(q, add(scalar_mul(1.0 / m, bar(T.sigma(y), T.sigma(x))),
                                           scalar_mul(m, bar(T.rho(y), T.rho(x)))));
        }
    } else {
        bd.ftc_case = 3;
        const double c = smallest_nonnegative_point(T);
        bd.c = c;
        if (q != 0.0) {
            const double m1 = scan.m1;
            const double m2 = scan.m2;
            FuzzyNumber acc = scalar_mul(1.0 / m1, bar(c, T.sigma(x)));
            acc = add(acc, scalar_mul(1.0 / m2, bar(T.sigma(y), c)));
            acc = add(acc, scalar_mul(m1, bar(T.rho(c), T.rho(x))));
            acc = add(acc, scalar_mul(m2, bar(T.rho(y), T.rho(c))));
            bd.h_alpha = scalar_mul(q, acc);
        }
    }
    bd.rhs = add(bd.main_term, bd.h_alpha);
    return bd;
}

FuzzyNumber ftc_rhs_quasi_regular_naive_split(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha)
{
    const double x = T.snap(a);
    const double y = T.snap(b);
    if (y < 0.0 || x >= 0.0) {
        return ftc_rhs_quasi_regular(F, T, x, y, alpha).rhs;
    }
    const NablaSigmaScan scan = scan_nabla_sigma(T, x, y);
    const double w = alpha * alpha + (1.0 - alpha) * (1.0 - alpha);
    const double q = alpha * (1.0 - alpha);
    const double c = smallest_nonnegative_point(T);
    auto bar = [&](double hi, double lo) { return gh_diff(F(hi), F(lo)); };
    auto window = [&](double lo, double hi, double m) {
        FuzzyNumber out = scalar_mul(w, bar(hi, lo));
        if (q != 0.0) {
            out = add(out, scalar_mul(q, add(scalar_mul(1.0 / m, bar(T.sigma(hi), T.sigma(lo))),
                                             scalar_mul(m, bar(T.rho(hi), T.rho(lo))))));
        }
        return out;
    };
    return add(window(x, c, scan.m1), window(c, y, scan.m2));
}

FtcBreakdown ftc_rhs_homogeneous(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha)
{
    const Homogeneity hom = T.homogeneity();
    if (!hom.homogeneous) {
        raise(ErrorCode::NotHomogeneous, "time scale is not homogeneous");
    }
    const double x = T.snap(a);
    const double y = T.snap(b);
    if (x > y) {
        raise(ErrorCode::InvalidBounds, "need a <= b");
    }
    const double k = hom.c;
    const double w = alpha * alpha + (1.0 - alpha) * (1.0 - alpha);
    const double q = alpha * (1.0 - alpha);
    FtcBreakdown bd;
    bd.alpha = alpha;
    const FuzzyNumber Fx = F(x);
    bd.main_term = scalar_mul(w, gh_diff(F(y), Fx));
    bd.h_alpha = zero_like(Fx);
    if (q != 0.0) {
        bd.h_alpha = scalar_mul(q, add(gh_diff(F(y + k), F(x + k)), gh_diff(F(y - k), F(x - k))));
    }
    bd.rhs = add(bd.main_term, bd.h_alpha);
    return bd;
}

namespace {

template <class Rhs>
FtcResult run_ftc(const std::string& name, const FuzzyFn& F, const TimeScale& T, double a, double b,
                  const std::vector<double>& alpha_grid, const NumericConfig& cfg, Rhs&& rhs_of)
{
    FtcResult out;
    out.report.name = name;
    out.report.tolerance = cfg.residual_tol;
    for (double alpha : alpha_grid) {
        try {
            FtcBreakdown bd = rhs_of(alpha);
            if (!(add(bd.main_term, bd.h_alpha) == bd.rhs)) {
                out.report.fail_with("RecombinationMismatch", "main term + correction != rhs");
            }
            const FuzzyNumber lhs = ftc_lhs(F, T, a, b, alpha, cfg);
            out.report.record(b, alpha, hausdorff(lhs, bd.rhs));
            out.breakdowns.push_back(std::move(bd));
        } catch (const Error& e) {
            out.report.fail_with(std::string(e.name()), where(b, alpha) + ": " + e.what());
            break;
        }
    }
    out.report.finalize();
    return out;
}

} // namespace

FtcResult check_ftc_quasi_regular(const FuzzyFn& F, const TimeScale& T, double a, double b,
                                  const std::vector<double>& alpha_grid, const NumericConfig& cfg)
{
    scan_nabla_sigma(T, a, b); // precondition errors propagate
    FtcResult out = run_ftc("ftc_quasi_regular", F, T, a, b, alpha_grid, cfg,
                            [&](double alpha) { return ftc_rhs_quasi_regular(F, T, a, b, alpha); });
    if (!out.breakdowns.empty() && out.breakdowns.front().ftc_case == 3) {
        double naive = 0.0;
        for (const auto& bd : out.breakdowns) {
            naive = std::max(naive, hausdorff(bd.rhs, ftc_rhs_quasi_regular_naive_split(F, T, a, b, bd.alpha)));
        }
        out.report.notes.push_back("case 3: splitting as independent windows [a,c], [c,b] deviates by " +
                                   std::to_string(naive));
    }
    return out;
}

FtcResult check_ftc_homogeneous(const FuzzyFn& F, const TimeScale& T, double a, double b,
                                const std::vector<double>& alpha_grid, const NumericConfig& cfg)
{
    if (!T.is_homogeneous()) {
        raise(ErrorCode::NotHomogeneous, "time scale is not homogeneous");
    }
    FtcResult out = run_ftc("ftc_homogeneous", F, T, a, b, alpha_grid, cfg,
                            [&](double alpha) { return ftc_rhs_homogeneous(F, T, a, b, alpha); });
    out.report.notes.push_back("boundary terms evaluated between a and b");
    return out;
}

// ---- product rule and integration by parts -------------------------------

FuzzyNumber product_rule_rhs(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double s, double alpha,
                             const NumericConfig& cfg)
{
    const double x = T.snap(s);
    FuzzyNumber out = mul(diamond_alpha_gh(f, T, x, alpha, cfg).value, g(x));
    if (alpha > 0.0) {
        out = add(out, scalar_mul(alpha, mul(f(T.sigma(x)), delta_gh(g, T, x, cfg).value)));
    }
    if (alpha < 1.0) {
        out = add(out, scalar_mul(1.0 - alpha, mul(f(T.rho(x)), nabla_gh(g, T, x, cfg).value)));
    }
    return out;
}

CheckReport check_product_rule(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T,
                               const std::vector<double>& points, const std::vector<double>& alpha_grid,
                               const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "product_rule";
    rep.tolerance = cfg.residual_tol;
    FuzzyFn fg = [&](double t) { return mul(f(t), g(t)); };
    for (double p : points) {
        for (double a : alpha_grid) {
            try {
                const FuzzyNumber lhs = diamond_alpha_gh(fg, T, p, a, cfg).value;
                rep.record(p, a, hausdorff(lhs, product_rule_rhs(f, g, T, p, a, cfg)));
            } catch (const Error& e) {
                rep.fail_with(std::string(e.name()), where(p, a) + ": " + e.what());
                return rep.finalize();
            }
        }
    }
    return rep.finalize();
}

IbpSides integration_by_parts_sides(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double a, double b,
                                    double alpha, const NumericConfig& cfg)
{
    FuzzyFn fg = [&](double t) { return mul(f(t), g(t)); };
    FuzzyFn lhs_integrand = [&](double t) { return mul(diamond_alpha_gh(f, T, t, alpha, cfg).value, g(t)); };
    FuzzyNumber lhs = named("integral of (diamond f) g",
                            [&] { return diamond_int_fuzzy(lhs_integrand, T, a, b, alpha, cfg).value; });

    FuzzyNumber rhs = named("boundary term of f g", [&] {
        return T.is_homogeneous() ? ftc_rhs_homogeneous(fg, T, a, b, alpha).rhs
                                  : ftc_rhs_quasi_regular(fg, T, a, b, alpha).rhs;
    });
    if (alpha > 0.0) {
        FuzzyFn fs_dg = [&](double t) { return mul(f(T.sigma(t)), delta_gh(g, T, t, cfg).value); };
        const FuzzyNumber A = named("integral of f(sigma) Delta g", [&] {
            return scalar_mul(alpha, diamond_int_fuzzy(fs_dg, T, a, b, alpha, cfg).value);
        });
        rhs = named("boundary term (-)gH alpha-part", [&] { return gh_diff(rhs, A); });
    }
    if (alpha < 1.0) {
        FuzzyFn fr_ng = [&](double t) { return mul(f(T.rho(t)), nabla_gh(g, T, t, cfg).value); };
        const FuzzyNumber B = named("integral of f(rho) Nabla g", [&] {
            return scalar_mul(1.0 - alpha, diamond_int_fuzzy(fr_ng, T, a, b, alpha, cfg).value);
        });
        rhs = named("(...) (-)gH (1-alpha)-part", [&] { return gh_diff(rhs, B); });
    }
    return {std::move(lhs), std::move(rhs)};
}

CheckReport check_integration_by_parts(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double a, double b,
                                       const std::vector<double>& alpha_grid, const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "integration_by_parts";
    rep.tolerance = cfg.residual_tol;
    for (double alpha : alpha_grid) {
        try {
            const IbpSides s = integration_by_parts_sides(f, g, T, a, b, alpha, cfg);
            rep.record(b, alpha, hausdorff(s.lhs, s.rhs));
        } catch (const Error& e) {
            rep.fail_with(std::string(e.name()), where(b, alpha) + ": " + e.what());
            break;
        }
    }
    if (!T.is_homogeneous()) {
        rep.notes.push_back("boundary term weighted by the nabla-sigma constants");
    }
    return rep.finalize();
}

// ---- integral algebra ------------------------------------------------------

CheckReport check_integral_algebra(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double a, double b,
                                   double m, double k, const std::vector<double>& alpha_grid,
                                   const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "integral_algebra";
    rep.tolerance = cfg.residual_tol;
    FuzzyFn sum = [&](double t) { return add(f(t), g(t)); };
    FuzzyFn scaled = [&](double t) { return scalar_mul(k, f(t)); };
    auto dist = [&](double t) { return hausdorff(f(t), g(t)); };
    double worst_lin = 0.0, worst_scal = 0.0, worst_add = 0.0, worst_metric = 0.0;
    for (double alpha : alpha_grid) {
        try {
            auto I = [&](const FuzzyFn& fn, double lo, double hi) {
                return diamond_int_fuzzy(fn, T, lo, hi, alpha, cfg).value;
            };
            const FuzzyNumber If = I(f, a, b);
            const FuzzyNumber Ig = I(g, a, b);
            const double r_lin = hausdorff(I(sum, a, b), add(If, Ig));
            const double r_scal = hausdorff(I(scaled, a, b), scalar_mul(k, If));
            const double r_add = hausdorff(If, add(I(f, a, m), I(f, m, b)));
            const double slack = diamond_int_scalar(dist, T, a, b, alpha, cfg) - hausdorff(If, Ig);
            const double r_metric = std::max(0.0, -slack);
            rep.record(a, alpha, r_lin);
            rep.record(a, alpha, r_scal);
            rep.record(m, alpha, r_add);
            rep.record(b, alpha, r_metric);
            worst_lin = std::max(worst_lin, r_lin);
            worst_scal = std::max(worst_scal, r_scal);
            worst_add = std::max(worst_add, r_add);
            worst_metric = std::max(worst_metric, r_metric);
        } catch (const Error& e) {
            rep.fail_with(std::string(e.name()), where(a, alpha) + ": " + e.what());
            break;
        }
    }
    rep.notes.push_back("linearity " + std::to_string(worst_lin));
    rep.notes.push_back("scalar " + std::to_string(worst_scal));
    rep.notes.push_back("additivity " + std::to_string(worst_add));
    rep.notes.push_back("metric inequality violation " + std::to_string(worst_metric));
    return rep.finalize();
}

// ---- derivative properties -------------------------------------------------

CheckReport check_existence_asymmetry(const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "existence_asymmetry";
    rep.tolerance = 1e-6;
    const int M = cfg.level_resolution;
    const FuzzyFunctionExpr f = FuzzyFunctionExpr::term(FuzzyNumber::triangular(1, 2, 3, M), CrispFn::tsininv());
    const double s1 = std::sin(1.0);

    struct Case {
        std::vector<Segment> segs;
        bool nabla_exists;
        FuzzyNumber expected;
    };
    const std::vector<Case> cases = {
        {{{-3, -1}, {0, 2}}, true, FuzzyNumber::triangular(-3 * s1, -2 * s1, -s1, M)},
        {{{-3, 0}, {1, 2}}, false, FuzzyNumber::triangular(s1, 2 * s1, 3 * s1, M)},
    };
    for (const auto& c : cases) {
        const TimeScale T = TimeScale::from_intervals(c.segs);
        auto exists_side = [&](bool nabla) { return nabla ? nabla_gh(f, T, 0.0, cfg) : delta_gh(f, T, 0.0, cfg); };
        try {
            rep.record(0.0, c.nabla_exists ? 0.0 : 1.0, hausdorff(exists_side(c.nabla_exists).value, c.expected));
        } catch (const Error& e) {
            rep.fail_with(std::string(e.name()), std::string("expected derivative at 0: ") + e.what());
            return rep.finalize();
        }
        try {
            exists_side(!c.nabla_exists);
            rep.fail_with("UnexpectedExistence", "the other one-sided derivative at 0 should not exist");
            return rep.finalize();
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NonConvergent) {
                rep.fail_with(std::string(e.name()), e.what());
                return rep.finalize();
            }
        }
        if (!check_continuity_at(f, T, 0.0, cfg)) {
            rep.fail_with("NotContinuous", "f should be continuous at 0");
            return rep.finalize();
        }
    }
    rep.notes.push_back("nabla exists and delta is NonConvergent at 0 on [-3,-1]u[0,2]; reversed on [-3,0]u[1,2]");
    return rep.finalize();
}

CheckReport check_diamond_consequences(const FuzzyFn& f, const TimeScale& T, const std::vector<double>& points,
                                       const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "diamond_consequences";
    rep.tolerance = cfg.residual_tol;
    for (double p : points) {
        const double x = T.snap(p);
        const PointClass pc = T.classify(x);
        for (double alpha : {0.25, 0.5, 0.75}) {
            try {
                const FuzzyNumber d = diamond_alpha_gh(f, T, x, alpha, cfg).value;
                const FuzzyNumber dl = delta_gh(f, T, x, cfg).value;
                const FuzzyNumber nb = nabla_gh(f, T, x, cfg).value;
                if (!check_continuity_at(f, T, x, cfg)) {
                    rep.fail_with("NotContinuous", "diamond derivative exists but f is not continuous, " +
                                                       where(x, alpha));
                    return rep.finalize();
                }
                rep.record(x, alpha, hausdorff(d, add(scalar_mul(alpha, dl), scalar_mul(1.0 - alpha, nb))));
                if (pc.kind == PointKind::S4 && pc.left_accumulates() && pc.right_accumulates()) {
                    // Independent one-sided quotient limits.
                    const FuzzyNumber fx = f(x);
                    FuzzyFn qr = [&](double t) { return scalar_mul(1.0 / (t - x), gh_diff(f(t), fx)); };
                    FuzzyFn ql = [&](double t) { return scalar_mul(1.0 / (x - t), gh_diff(fx, f(t))); };
                    const FuzzyNumber lr =
                        one_sided_limit(qr, x, Side::Right, cfg, std::min(cfg.h0, T.dense_room(x, Side::Right)));
                    const FuzzyNumber ll =
                        one_sided_limit(ql, x, Side::Left, cfg, std::min(cfg.h0, T.dense_room(x, Side::Left)));
                    rep.record(x, alpha, hausdorff(dl, lr));
                    rep.record(x, alpha, hausdorff(nb, ll));
                    rep.record(x, alpha, hausdorff(d, dl));
                }
            } catch (const Error& e) {
                // Non-existence is admissible here; the implications only
                // bind where the diamond derivative exists.
                if (e.code() != ErrorCode::NonConvergent && e.code() != ErrorCode::GHDifferenceNotFuzzy) {
                    rep.fail_with(std::string(e.name()), where(x, alpha) + ": " + e.what());
                    return rep.finalize();
                }
            }
        }
    }
    return rep.finalize();
}

CheckReport check_sum_scalar_rules(const FuzzyFn& f, const FuzzyFn& g, double c, const TimeScale& T,
                                   const std::vector<double>& points, const std::vector<double>& alpha_grid,
                                   const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "sum_scalar_rules";
    rep.tolerance = cfg.residual_tol;
    FuzzyFn sum = [&](double t) { return add(f(t), g(t)); };
    FuzzyFn scaled = [&](double t) { return scalar_mul(c, f(t)); };
    for (double p : points) {
        for (double alpha : alpha_grid) {
            try {
                const FuzzyNumber df = diamond_alpha_gh(f, T, p, alpha, cfg).value;
                const FuzzyNumber dg = diamond_alpha_gh(g, T, p, alpha, cfg).value;
                rep.record(p, alpha, hausdorff(diamond_alpha_gh(sum, T, p, alpha, cfg).value, add(df, dg)));
                rep.record(p, alpha, hausdorff(diamond_alpha_gh(scaled, T, p, alpha, cfg).value, scalar_mul(c, df)));
            } catch (const Error& e) {
                rep.fail_with(std::string(e.name()), where(p, alpha) + ": " + e.what());
                return rep.finalize();
            }
        }
    }
    return rep.finalize();
}

double diamond_definition_defect(const FuzzyFn& f, const TimeScale& T, double s, double t, double alpha,
                                 const FuzzyNumber& derivative)
{
    const JumpContext jc = JumpContext::at(T, s, t);
    const double x = jc.s;
    const FuzzyNumber ft = f(t);
    const FuzzyNumber fwd = scalar_mul(alpha * jc.nu_st, gh_diff(f(T.sigma(x)), ft));
    const FuzzyNumber bwd = scalar_mul((1.0 - alpha) * jc.mu_st, gh_diff(ft, f(T.rho(x))));
    const double prod = jc.mu_st * jc.nu_st;
    const double d = hausdorff(add(fwd, bwd), scalar_mul(prod, derivative));
    return prod != 0.0 ? d / std::abs(prod) : d;
}

} // namespace fuzzyts
