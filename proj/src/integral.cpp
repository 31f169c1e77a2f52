#include "fuzzyts/integral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace fuzzyts {

namespace {

using Vec = std::vector<double>;

void require_alpha(double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        raise(ErrorCode::AlphaOutOfRange, "alpha=" + std::to_string(alpha));
    }
}

double sup_norm(const Vec& v)
{
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

Vec simpson_rule(double h, const Vec& fa, const Vec& fm, const Vec& fb)
{
    Vec out(fa.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = h / 6.0 * (fa[i] + 4.0 * fm[i] + fb[i]);
    }
    return out;
}

struct Simpson {
    const VectorFn& g;
    int max_depth;

    Vec run(double a, double b, const Vec& fa, const Vec& fm, const Vec& fb, const Vec& whole, double tol,
            int depth) const
    {
        const double m = 0.5 * (a + b);
        const double lm = 0.5 * (a + m);
        const double rm = 0.5 * (m + b);
        const Vec flm = g(lm);
        const Vec frm = g(rm);
        Vec left = simpson_rule(m - a, fa, flm, fm);
        Vec right = simpson_rule(b - m, fm, frm, fb);
        Vec sum(left.size());
        double err = 0.0;
        for (std::size_t i = 0; i < sum.size(); ++i) {
            sum[i] = left[i] + right[i];
            err = std::max(err, std::abs(sum[i] - whole[i]));
        }
        // Below a few ulps of the running value the error estimate is noise.
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * sup_norm(sum);
        if (err <= 15.0 * std::max(tol, floor)) {
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] += (sum[i] - whole[i]) / 15.0;
            }
            return sum;
        }
        if (depth >= max_depth || m <= a || b <= m) {
            raise(ErrorCode::QuadratureDepthExceeded,
                  "adaptive Simpson did not settle on [" + std::to_string(a) + ", " + std::to_string(b) + "]");
        }
        Vec l = run(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
        Vec r = run(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
        for (std::size_t i = 0; i < l.size(); ++i) {
            l[i] += r[i];
        }
        return l;
    }
};

void axpy(Vec& acc, double w, const Vec& v)
{
    if (acc.empty()) {
        acc.assign(v.size(), 0.0);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        acc[i] += w * v[i];
    }
}

Vec integral_vector(const VectorFn& g, const TimeScale& T, double a, double b, const NumericConfig& cfg,
                    bool delta)
{
    const IntegrationPlan plan = build_plan(T, a, b);
    Vec acc;
    const auto& terms = delta ? plan.scattered_delta_terms : plan.scattered_nabla_terms;
    for (const auto& [t, w] : terms) {
        axpy(acc, w, g(t));
    }
    for (const auto& piece : plan.continuous_pieces) {
        axpy(acc, 1.0, simpson_vector(g, piece.lo, piece.hi, cfg));
    }
    if (acc.empty()) {
        acc.assign(g(T.snap(a)).size(), 0.0);
    }
    return acc;
}

FuzzyNumber stack_levels(const Vec& flat, double tol, ErrorCode code) { return unflatten(flat, tol, code); }

} // namespace

IntegrationPlan build_plan(const TimeScale& T, double a, double b)
{
    const double x = T.snap(a);
    const double y = T.snap(b);
    if (x > y) {
        raise(ErrorCode::InvalidBounds, "integration needs a <= b");
    }
    IntegrationPlan plan;
    const auto& segs = T.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        const Segment& s = segs[i];
        const double lo = std::max(s.lo, x);
        const double hi = std::min(s.hi, y);
        if (hi > lo) {
            plan.continuous_pieces.push_back({lo, hi});
        }
        if (i + 1 < segs.size() && s.hi >= x && s.hi < y) {
            plan.scattered_delta_terms.emplace_back(s.hi, segs[i + 1].lo - s.hi);
        }
        if (i > 0 && s.lo > x && s.lo <= y) {
            plan.scattered_nabla_terms.emplace_back(s.lo, s.lo - segs[i - 1].hi);
        }
    }
    return plan;
}

std::vector<double> simpson_vector(const VectorFn& g, double lo, double hi, const NumericConfig& cfg)
{
    const Vec fa = g(lo);
    const Vec fb = g(hi);
    const Vec fm = g(0.5 * (lo + hi));
    const Vec whole = simpson_rule(hi - lo, fa, fm, fb);
    Simpson s{g, cfg.quad_max_depth};
    return s.run(lo, hi, fa, fm, fb, whole, cfg.quad_tol, 0);
}

std::vector<double> delta_int_vector(const VectorFn& g, const TimeScale& T, double a, double b,
                                     const NumericConfig& cfg)
{
    return integral_vector(g, T, a, b, cfg, true);
}

std::vector<double> nabla_int_vector(const VectorFn& g, const TimeScale& T, double a, double b,
                                     const NumericConfig& cfg)
{
    return integral_vector(g, T, a, b, cfg, false);
}

std::vector<double> diamond_int_vector(const VectorFn& g, const TimeScale& T, double a, double b, double alpha,
                                       const NumericConfig& cfg)
{
    require_alpha(alpha);
    if (alpha == 1.0) {
        return delta_int_vector(g, T, a, b, cfg);
    }
    if (alpha == 0.0) {
        return nabla_int_vector(g, T, a, b, cfg);
    }
    const Vec d = delta_int_vector(g, T, a, b, cfg);
    const Vec n = nabla_int_vector(g, T, a, b, cfg);
    Vec out(d.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = alpha * d[i] + (1.0 - alpha) * n[i];
    }
    return out;
}

double delta_int_scalar(const ScalarFn& g, const TimeScale& T, double a, double b, const NumericConfig& cfg)
{
    return delta_int_vector([&g](double t) { return Vec{g(t)}; }, T, a, b, cfg)[0];
}

double nabla_int_scalar(const ScalarFn& g, const TimeScale& T, double a, double b, const NumericConfig& cfg)
{
    return nabla_int_vector([&g](double t) { return Vec{g(t)}; }, T, a, b, cfg)[0];
}

double diamond_int_scalar(const ScalarFn& g, const TimeScale& T, double a, double b, double alpha,
                          const NumericConfig& cfg)
{
    return diamond_int_vector([&g](double t) { return Vec{g(t)}; }, T, a, b, alpha, cfg)[0];
}

FuzzyIntegralResult diamond_int_fuzzy(const FuzzyFn& f, const TimeScale& T, double a, double b, double alpha,
                                      const NumericConfig& cfg)
{
    require_alpha(alpha);
    auto g = [&f](double t) {
        try {
            return flatten(f(t));
        } catch (const Error& e) {
            if (e.code() == ErrorCode::LevelMonotonicityViolation || e.code() == ErrorCode::EmptyCore) {
                raise(ErrorCode::IntegrandNotFuzzyAt, "integrand is not a fuzzy number at t=" + std::to_string(t));
            }
            throw;
        }
    };
    const Vec flat = diamond_int_vector(g, T, a, b, alpha, cfg);
    FuzzyIntegralResult res{stack_levels(flat, kResultFuzzyTol, ErrorCode::ResultNotFuzzy), {}, {}};
    for (const auto& lv : res.value.levels()) {
        res.per_level_lower.push_back(lv.lo);
        res.per_level_upper.push_back(lv.hi);
    }
    return res;
}

LocalSteps local_step_integrals(const FuzzyFn& f, const TimeScale& T, double t, double alpha,
                                const NumericConfig& cfg)
{
    require_alpha(alpha);
    const double x = T.snap(t);
    if (!T.in_kappa_both(x)) {
        raise(ErrorCode::PointNotInKappa, "local steps need t in T^kappa_kappa");
    }
    const double sx = T.sigma(x);
    const double rx = T.rho(x);
    LocalSteps out{diamond_int_fuzzy(f, T, x, sx, alpha, cfg).value, diamond_int_fuzzy(f, T, rx, x, alpha, cfg).value};

    const FuzzyNumber fx = f(x);
    const FuzzyNumber fwd_closed = scalar_mul(sx - x, add(scalar_mul(alpha, fx), scalar_mul(1.0 - alpha, f(sx))));
    const FuzzyNumber bwd_closed = scalar_mul(x - rx, add(scalar_mul(alpha, f(rx)), scalar_mul(1.0 - alpha, fx)));
    // For dense sides both one-step integrals vanish.
    if (hausdorff(out.forward, fwd_closed) > kClosedFormTol || hausdorff(out.backward, bwd_closed) > kClosedFormTol) {
        raise(ErrorCode::ClosedFormMismatch, "one-step integral disagrees with its closed form at t=" + std::to_string(x));
    }
    return out;
}

} // namespace fuzzyts
