#include "fuzzyts/calculus.hpp"

#include "fuzzyts/limits.hpp"

#include <cmath>
#include <string>

namespace fuzzyts {

namespace {

// Two one-sided limits at a two-sided dense point must agree this closely.
constexpr double kSideAgreementFactor = 100.0;

std::string at_point(double s) { return "at s=" + std::to_string(s); }

// Limit of the quotient (f(s + dir h) (-) f(s)) / (dir h) as h -> 0+.
struct SideLimit {
    FuzzyNumber value;
    GhCase gh_case;
};

SideLimit quotient_limit(const FuzzyFn& f, double s, Side side, double room, const NumericConfig& cfg)
{
    const FuzzyNumber fs = f(s);
    const double dir = side == Side::Right ? 1.0 : -1.0;
    GhCase last_case = GhCase::CaseI;
    auto sample = [&](double h) {
        const double t = s + dir * h;
        // Right: (f(t) (-) f(s)) / h; left: (f(s) (-) f(t)) / h.
        GhDiffResult d = side == Side::Right ? gh_diff_detailed(f(t), fs) : gh_diff_detailed(fs, f(t));
        last_case = d.summary;
        return flatten(scalar_mul(1.0 / h, d.value));
    };
    const double h_start = std::min(cfg.h0, room);
    auto lim = detail::richardson_limit(sample, h_start, cfg);
    if (!lim) {
        raise(ErrorCode::NonConvergent,
              std::string(side == Side::Right ? "right" : "left") + " difference quotient does not converge " +
                  at_point(s));
    }
    return {unflatten(*lim, 10.0 * cfg.limit_tol, ErrorCode::NonConvergent), last_case};
}

DerivativeResult dense_derivative(const FuzzyFn& f, const TimeScale& T, double s, bool left, bool right,
                                  const NumericConfig& cfg)
{
    if (!left && !right) {
        raise(ErrorCode::DegenerateQuotient, "no accumulation side " + at_point(s));
    }
    if (left && right) {
        SideLimit l = quotient_limit(f, s, Side::Left, T.dense_room(s, Side::Left), cfg);
        SideLimit r = quotient_limit(f, s, Side::Right, T.dense_room(s, Side::Right), cfg);
        if (hausdorff(l.value, r.value) > kSideAgreementFactor * cfg.limit_tol) {
            raise(ErrorCode::NonConvergent, "one-sided derivatives disagree " + at_point(s));
        }
        std::vector<Interval> avg(l.value.size());
        for (std::size_t j = 0; j < avg.size(); ++j) {
            avg[j] = {0.5 * (l.value.level(j).lo + r.value.level(j).lo),
                      0.5 * (l.value.level(j).hi + r.value.level(j).hi)};
        }
        return {FuzzyNumber::from_levels_tolerant(std::move(avg), 10.0 * cfg.limit_tol, ErrorCode::NonConvergent),
                DerivativeKind::LimitDense, combine(l.gh_case, r.gh_case)};
    }
    const Side side = left ? Side::Left : Side::Right;
    SideLimit one = quotient_limit(f, s, side, T.dense_room(s, side), cfg);
    return {std::move(one.value), DerivativeKind::LimitDense, one.gh_case};
}

FuzzyNumber crisp_wrap(double x) { return FuzzyNumber::crisp(x, 1); }

} // namespace

const char* derivative_kind_name(DerivativeKind k) noexcept
{
    return k == DerivativeKind::ExactScattered ? "ExactScattered" : "LimitDense";
}

JumpContext JumpContext::at(const TimeScale& T, double s, double t)
{
    const double x = T.snap(s);
    return {x, t, T.sigma(x) - t, t - T.rho(x)};
}

DerivativeResult delta_gh(const FuzzyFn& f, const TimeScale& T, double s, const NumericConfig& cfg)
{
    const double x = T.snap(s);
    if (!T.in_kappa_upper(x)) {
        raise(ErrorCode::PointNotInKappa, "delta derivative needs s in T^kappa, " + at_point(x));
    }
    const PointClass pc = T.classify(x);
    if (pc.right_scattered()) {
        const double sx = T.sigma(x);
        GhDiffResult d = gh_diff_detailed(f(sx), f(x));
        return {scalar_mul(1.0 / (sx - x), d.value), DerivativeKind::ExactScattered, d.summary};
    }
    return dense_derivative(f, T, x, pc.left_accumulates(), pc.right_accumulates(), cfg);
}

DerivativeResult nabla_gh(const FuzzyFn& f, const TimeScale& T, double s, const NumericConfig& cfg)
{
    const double x = T.snap(s);
    if (!T.in_kappa_lower(x)) {
        raise(ErrorCode::PointNotInKappa, "nabla derivative needs s in T_kappa, " + at_point(x));
    }
    const PointClass pc = T.classify(x);
    if (pc.left_scattered()) {
        const double rx = T.rho(x);
        GhDiffResult d = gh_diff_detailed(f(x), f(rx));
        return {scalar_mul(1.0 / (x - rx), d.value), DerivativeKind::ExactScattered, d.summary};
    }
    return dense_derivative(f, T, x, pc.left_accumulates(), pc.right_accumulates(), cfg);
}

DerivativeResult diamond_alpha_gh(const FuzzyFn& f, const TimeScale& T, double s, double alpha,
                                  const NumericConfig& cfg)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        raise(ErrorCode::AlphaOutOfRange, "alpha=" + std::to_string(alpha));
    }
    if (alpha == 1.0) {
        return delta_gh(f, T, s, cfg);
    }
    if (alpha == 0.0) {
        return nabla_gh(f, T, s, cfg);
    }
    const double x = T.snap(s);
    if (!T.in_kappa_both(x)) {
        raise(ErrorCode::PointNotInKappa, "diamond derivative needs s in T^kappa_kappa, " + at_point(x));
    }
    DerivativeResult d = delta_gh(f, T, x, cfg);
    DerivativeResult n = nabla_gh(f, T, x, cfg);
    const bool exact = d.kind == DerivativeKind::ExactScattered && n.kind == DerivativeKind::ExactScattered;
    return {add(scalar_mul(alpha, d.value), scalar_mul(1.0 - alpha, n.value)),
            exact ? DerivativeKind::ExactScattered : DerivativeKind::LimitDense, combine(d.gh_case, n.gh_case)};
}

double delta_crisp(const std::function<double(double)>& g, const TimeScale& T, double s, const NumericConfig& cfg)
{
    FuzzyFn f = [&g](double t) { return crisp_wrap(g(t)); };
    return delta_gh(f, T, s, cfg).value.level(0).lo;
}

double nabla_crisp(const std::function<double(double)>& g, const TimeScale& T, double s, const NumericConfig& cfg)
{
    FuzzyFn f = [&g](double t) { return crisp_wrap(g(t)); };
    return nabla_gh(f, T, s, cfg).value.level(0).lo;
}

bool check_continuity_at(const FuzzyFn& f, const TimeScale& T, double s, const NumericConfig& cfg)
{
    try {
        const double x = T.snap(s);
        const PointClass pc = T.classify(x);
        const FuzzyNumber fx = f(x);
        auto side_ok = [&](Side side) {
            const double dir = side == Side::Right ? 1.0 : -1.0;
            const double h_start = std::min(cfg.h0, T.dense_room(x, side));
            int passes = 0;
            for (int k = 0; k <= cfg.max_refinements; ++k) {
                const double h = std::ldexp(h_start, -k);
                if (hausdorff(f(x + dir * h), fx) <= cfg.limit_tol) {
                    if (++passes >= 2) {
                        return true;
                    }
                } else {
                    passes = 0;
                }
            }
            return false;
        };
        if (pc.left_accumulates() && !side_ok(Side::Left)) {
            return false;
        }
        if (pc.right_accumulates() && !side_ok(Side::Right)) {
            return false;
        }
        return true;
    } catch (const Error&) {
        return false;
    }
}

CheckReport check_jump_identity(const CrispFn& g, const TimeScale& T, double s, const NumericConfig& cfg)
{
    CheckReport rep;
    rep.name = "jump_identity";
    rep.tolerance = cfg.residual_tol;
    const double x = T.snap(s);
    const double mu = T.mu(x);
    const double nu = T.nu(x);
    auto fn = [&g](double t) { return g(t); };
    // nu * Nabla(Delta g)(s) telescopes to Delta g(s) - Delta g(rho s) when nu > 0.
    double lhs = 0.0;
    double rhs = 0.0;
    if (nu > 0.0) {
        if (!T.in_kappa_upper(x)) {
            raise(ErrorCode::DegenerateQuotient, "Delta g undefined " + at_point(x));
        }
        lhs = delta_crisp(fn, T, x, cfg) - delta_crisp(fn, T, T.rho(x), cfg);
    }
    if (mu > 0.0) {
        if (!T.in_kappa_lower(T.sigma(x))) {
            raise(ErrorCode::DegenerateQuotient, "Nabla g undefined at sigma(s), " + at_point(x));
        }
        rhs = nabla_crisp(fn, T, T.sigma(x), cfg) - nabla_crisp(fn, T, x, cfg);
    }
    rep.record(x, 0.0, std::abs(lhs - rhs));
    return rep.finalize();
}

} // namespace fuzzyts
