#include "fuzzyts/timescale.hpp"

#include "fuzzyts/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzyts {

namespace {

std::string fmt_point(double t)
{
    std::ostringstream os;
    os.precision(17);
    os << t;
    return os.str();
}

} // namespace

const char* kind_name(PointKind kind) noexcept
{
    switch (kind) {
    case PointKind::S1: return "S1";
    case PointKind::S2: return "S2";
    case PointKind::S3: return "S3";
    case PointKind::S4: return "S4";
    }
    return "?";
}

TimeScale TimeScale::from_intervals(std::span<const Segment> intervals)
{
    if (intervals.empty()) {
        raise(ErrorCode::EmptyTimeScale, "time scale needs at least one interval");
    }
    std::vector<Segment> sorted(intervals.begin(), intervals.end());
    for (const auto& s : sorted) {
        if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || s.lo > s.hi) {
            raise(ErrorCode::InvalidInterval,
                  "invalid interval [" + fmt_point(s.lo) + ", " + fmt_point(s.hi) + "]");
        }
    }
    std::sort(sorted.begin(), sorted.end(),
              [](const Segment& x, const Segment& y) { return x.lo < y.lo || (x.lo == y.lo && x.hi < y.hi); });

    std::vector<Segment> merged;
    merged.reserve(sorted.size());
    for (const auto& s : sorted) {
        if (!merged.empty() && s.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, s.hi);
        } else {
            merged.push_back(s);
        }
    }
    return TimeScale(std::move(merged));
}

TimeScale TimeScale::uniform(double a, double b, double step)
{
    if (!(step > 0.0) || a > b) {
        raise(ErrorCode::InvalidInterval, "uniform scale needs a <= b and step > 0");
    }
    const double n_real = (b - a) / step;
    const auto n = static_cast<long>(std::llround(n_real));
    if (std::abs(n_real - static_cast<double>(n)) > 1e-9 * std::max(1.0, n_real)) {
        raise(ErrorCode::InvalidInterval, "uniform scale: (b - a) is not a multiple of step");
    }
    std::vector<Segment> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k < n; ++k) {
        const double t = a + static_cast<double>(k) * step;
        pts.push_back({t, t});
    }
    pts.push_back({b, b});
    return TimeScale::from_intervals(pts);
}

TimeScale TimeScale::geometric_two_sided(double q, int k_min, int k_max)
{
    if (!(q > 1.0) || k_min > k_max) {
        raise(ErrorCode::InvalidInterval, "geometric scale needs q > 1 and k_min <= k_max");
    }
    std::vector<Segment> pts;
    for (int k = k_min; k <= k_max; ++k) {
        const double v = std::pow(q, k);
        pts.push_back({v, v});
        pts.push_back({-v, -v});
    }
    return TimeScale::from_intervals(pts);
}

TimeScale::Located TimeScale::locate(double t) const
{
    // First segment whose hi is >= t - tol.
    const auto it = std::lower_bound(segments_.begin(), segments_.end(), t - kMembershipTol,
                                     [](const Segment& s, double v) { return s.hi < v; });
    if (it != segments_.end() && t >= it->lo - kMembershipTol) {
        const auto idx = static_cast<std::size_t>(it - segments_.begin());
        double snapped = t;
        if (std::abs(t - it->lo) <= kMembershipTol) {
            snapped = it->lo;
        } else if (std::abs(t - it->hi) <= kMembershipTol) {
            snapped = it->hi;
        }
        snapped = std::clamp(snapped, it->lo, it->hi);
        return {idx, snapped};
    }
    raise(ErrorCode::PointNotInScale, "point " + fmt_point(t) + " is not in the time scale");
}

bool TimeScale::contains(double t) const noexcept
{
    try {
        (void)locate(t);
        return true;
    } catch (const Error&) {
        return false;
    }
}

double TimeScale::snap(double t) const
{
    return locate(t).t;
}

double TimeScale::sigma(double t) const
{
    const auto [i, x] = locate(t);
    if (x < segments_[i].hi) {
        return x;
    }
    return i + 1 < segments_.size() ? segments_[i + 1].lo : x;
}

double TimeScale::rho(double t) const
{
    const auto [i, x] = locate(t);
    if (x > segments_[i].lo) {
        return x;
    }
    return i > 0 ? segments_[i - 1].hi : x;
}

double TimeScale::mu(double t) const
{
    const double x = snap(t);
    return sigma(x) - x;
}

double TimeScale::nu(double t) const
{
    const double x = snap(t);
    return x - rho(x);
}

PointClass TimeScale::classify(double t) const
{
    const double x = snap(t);
    const bool rs = sigma(x) > x;
    const bool ls = rho(x) < x;
    PointKind kind;
    if (rs && ls) {
        kind = PointKind::S3;
    } else if (rs) {
        kind = PointKind::S1;
    } else if (ls) {
        kind = PointKind::S2;
    } else {
        kind = PointKind::S4;
    }
    return {kind, x == min(), x == max()};
}

bool TimeScale::in_kappa_upper(double t) const
{
    const double x = snap(t);
    return !(x == max() && rho(x) < x);
}

bool TimeScale::in_kappa_lower(double t) const
{
    const double x = snap(t);
    return !(x == min() && sigma(x) > x);
}

bool TimeScale::is_quasi_regular() const
{
    // Interior points of segments satisfy both identities trivially; only
    // the segment endpoints can break them.
    for (const auto& s : segments_) {
        for (const double t : {s.lo, s.hi}) {
            if (in_kappa_lower(t) && sigma(rho(t)) != t) {
                return false;
            }
            if (in_kappa_upper(t) && rho(sigma(t)) != t) {
                return false;
            }
        }
    }
    return true;
}

Homogeneity TimeScale::homogeneity() const
{
    if (segments_.size() == 1) {
        return {true, 0.0};
    }
    for (const auto& s : segments_) {
        if (!s.degenerate()) {
            return {false, 0.0};
        }
    }
    const double c = segments_[1].lo - segments_[0].lo;
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        const double gap = segments_[i].lo - segments_[i - 1].lo;
        if (std::abs(gap - c) > 1e-9 * std::max(1.0, c)) {
            return {false, 0.0};
        }
    }
    return {true, c};
}

double TimeScale::nabla_sigma(double t) const
{
    const double x = snap(t);
    const double r = rho(x);
    if (r < x) {
        return (sigma(x) - sigma(r)) / (x - r);
    }
    if (sigma(x) == x) {
        return 1.0;
    }
    raise(ErrorCode::DegenerateQuotient, "nabla sigma undefined at " + fmt_point(x) +
                                             ": left side has no scattered step and sigma jumps");
}

double TimeScale::delta_rho(double t) const
{
    const double x = snap(t);
    const double s = sigma(x);
    if (s > x) {
        return (rho(s) - rho(x)) / (s - x);
    }
    if (rho(x) == x) {
        return 1.0;
    }
    raise(ErrorCode::DegenerateQuotient, "delta rho undefined at " + fmt_point(x) +
                                             ": right side has no scattered step and rho jumps");
}

double TimeScale::dense_room(double t, Side side) const
{
    const auto [i, x] = locate(t);
    return side == Side::Right ? segments_[i].hi - x : x - segments_[i].lo;
}

std::vector<double> TimeScale::grid(double a, double b, double h) const
{
    const double lo = snap(a);
    const double hi = snap(b);
    if (lo > hi) {
        raise(ErrorCode::InvalidBounds, "grid needs a <= b");
    }
    if (!(h > 0.0)) {
        raise(ErrorCode::InvalidInterval, "grid step must be positive");
    }
    std::vector<double> out;
    for (const auto& s : segments_) {
        const double l = std::max(s.lo, lo);
        const double u = std::min(s.hi, hi);
        if (l > u) {
            continue;
        }
        if (l == u) {
            out.push_back(l);
            continue;
        }
        const auto n = static_cast<long>(std::ceil((u - l) / h - 1e-12));
        for (long k = 0; k < n; ++k) {
            out.push_back(l + (u - l) * static_cast<double>(k) / static_cast<double>(n));
        }
        out.push_back(u);
    }
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TimeScale make_timescale(std::span<const std::pair<double, double>> intervals)
{
    std::vector<Segment> segs;
    segs.reserve(intervals.size());
    for (const auto& [lo, hi] : intervals) {
        segs.push_back({lo, hi});
    }
    return TimeScale::from_intervals(segs);
}

} // namespace fuzzyts
