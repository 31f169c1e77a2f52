#include "fuzzyts/fuzzy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fuzzyts {

namespace {

void check_resolution(int resolution)
{
    if (resolution < 1) {
        raise(ErrorCode::ResolutionMismatch, "level resolution must be at least 1");
    }
}

void check_same(const FuzzyNumber& u, const FuzzyNumber& v)
{
    if (u.size() != v.size()) {
        std::ostringstream os;
        os << "level resolution mismatch: " << u.resolution() << " vs " << v.resolution();
        raise(ErrorCode::ResolutionMismatch, os.str());
    }
}

// Turns -0.0 into +0.0 so serialized output does not depend on signs of zero.
inline double unsign_zero(double x) noexcept { return x + 0.0; }

} // namespace

FuzzyNumber FuzzyNumber::triangular(double a1, double a2, double a3, int resolution)
{
    check_resolution(resolution);
    if (!(a1 <= a2 && a2 <= a3)) {
        raise(ErrorCode::NotSorted, "triangular fuzzy number needs a1 <= a2 <= a3");
    }
    std::vector<Interval> levels(static_cast<std::size_t>(resolution) + 1);
    for (int j = 0; j <= resolution; ++j) {
        const double r = static_cast<double>(j) / resolution;
        levels[static_cast<std::size_t>(j)] = {a1 + r * (a2 - a1), a3 - r * (a3 - a2)};
    }
    levels.back() = {a2, a2};
    return FuzzyNumber(std::move(levels));
}

FuzzyNumber FuzzyNumber::crisp(double x, int resolution)
{
    return interval(x, x, resolution);
}

FuzzyNumber FuzzyNumber::interval(double lo, double hi, int resolution)
{
    check_resolution(resolution);
    if (lo > hi) {
        raise(ErrorCode::EmptyCore, "interval fuzzy number needs lo <= hi");
    }
    return FuzzyNumber(std::vector<Interval>(static_cast<std::size_t>(resolution) + 1, Interval{lo, hi}));
}

FuzzyNumber FuzzyNumber::from_levels(std::vector<Interval> levels)
{
    if (levels.size() < 2) {
        raise(ErrorCode::ResolutionMismatch, "a level stack needs at least two levels");
    }
    for (std::size_t j = 1; j < levels.size(); ++j) {
        if (levels[j].lo < levels[j - 1].lo || levels[j].hi > levels[j - 1].hi) {
            std::ostringstream os;
            os << "level " << j << " is not nested in level " << j - 1;
            raise(ErrorCode::LevelMonotonicityViolation, os.str());
        }
    }
    for (const auto& l : levels) {
        if (!(l.lo <= l.hi)) {
            raise(ErrorCode::EmptyCore, "core level is empty (lo > hi)");
        }
    }
    return FuzzyNumber(std::move(levels));
}

FuzzyNumber FuzzyNumber::from_levels_tolerant(std::vector<Interval> levels, double tol, ErrorCode code)
{
    if (levels.size() < 2) {
        raise(ErrorCode::ResolutionMismatch, "a level stack needs at least two levels");
    }
    for (std::size_t j = 0; j < levels.size(); ++j) {
        const auto& l = levels[j];
        bool ok = std::isfinite(l.lo) && std::isfinite(l.hi) && l.lo <= l.hi + tol;
        if (ok && j > 0) {
            ok = l.lo >= levels[j - 1].lo - tol && l.hi <= levels[j - 1].hi + tol;
        }
        if (!ok) {
            std::ostringstream os;
            os.precision(17);
            os << "level stack is not a fuzzy number at level " << j << " [" << l.lo << ", " << l.hi << "]";
            raise(code, os.str());
        }
    }
    // Repair pass: at most `tol` movement per endpoint.
    auto& first = levels.front();
    if (first.lo > first.hi) {
        first.lo = first.hi = 0.5 * (first.lo + first.hi);
    }
    for (std::size_t j = 1; j < levels.size(); ++j) {
        auto& l = levels[j];
        const auto& prev = levels[j - 1];
        l.lo = std::max(l.lo, prev.lo);
        l.hi = std::min(l.hi, prev.hi);
        if (l.lo > l.hi) {
            l.lo = l.hi = std::clamp(0.5 * (l.lo + l.hi), prev.lo, prev.hi);
        }
    }
    return FuzzyNumber(std::move(levels));
}

Interval FuzzyNumber::at(double r) const
{
    const int m = resolution();
    const double x = std::clamp(r, 0.0, 1.0) * m;
    const auto j = std::min(static_cast<std::size_t>(x), static_cast<std::size_t>(m - 1));
    const double w = x - static_cast<double>(j);
    const auto& a = levels_[j];
    const auto& b = levels_[j + 1];
    return {a.lo + w * (b.lo - a.lo), a.hi + w * (b.hi - a.hi)};
}

std::vector<double> FuzzyNumber::widths() const
{
    std::vector<double> out;
    out.reserve(levels_.size());
    for (const auto& l : levels_) {
        out.push_back(l.width());
    }
    return out;
}

bool FuzzyNumber::is_crisp() const noexcept
{
    const auto& base = levels_.front();
    return base.lo == base.hi;
}

FuzzyNumber FuzzyNumber::resampled(int resolution) const
{
    check_resolution(resolution);
    if (resolution == this->resolution()) {
        return *this;
    }
    std::vector<Interval> out(static_cast<std::size_t>(resolution) + 1);
    for (int j = 0; j <= resolution; ++j) {
        out[static_cast<std::size_t>(j)] = at(static_cast<double>(j) / resolution);
    }
    return from_levels_tolerant(std::move(out), 1e-12, ErrorCode::LevelMonotonicityViolation);
}

const char* gh_case_name(GhCase c) noexcept
{
    switch (c) {
    case GhCase::CaseI: return "CaseI";
    case GhCase::CaseII: return "CaseII";
    case GhCase::Mixed: return "Mixed";
    }
    return "?";
}

GhCase combine(GhCase a, GhCase b) noexcept
{
    return a == b ? a : GhCase::Mixed;
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v)
{
    check_same(u, v);
    std::vector<Interval> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        out[j] = {u.levels_[j].lo + v.levels_[j].lo, u.levels_[j].hi + v.levels_[j].hi};
    }
    return FuzzyNumber(std::move(out));
}

FuzzyNumber scalar_mul(double k, const FuzzyNumber& u)
{
    std::vector<Interval> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        const auto& l = u.levels_[j];
        out[j] = k >= 0.0 ? Interval{unsign_zero(k * l.lo), unsign_zero(k * l.hi)}
                          : Interval{unsign_zero(k * l.hi), unsign_zero(k * l.lo)};
    }
    return FuzzyNumber(std::move(out));
}

FuzzyNumber mul(const FuzzyNumber& u, const FuzzyNumber& v)
{
    check_same(u, v);
    std::vector<Interval> out(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) {
        const auto& a = u.levels_[j];
        const auto& b = v.levels_[j];
        const double p1 = a.lo * b.lo;
        const double p2 = a.lo * b.hi;
        const double p3 = a.hi * b.lo;
        const double p4 = a.hi * b.hi;
        out[j] = {unsign_zero(std::min({p1, p2, p3, p4})), unsign_zero(std::max({p1, p2, p3, p4}))};
    }
    return FuzzyNumber(std::move(out));
}

GhDiffResult gh_diff_detailed(const FuzzyNumber& u, const FuzzyNumber& v)
{
    check_same(u, v);
    std::vector<Interval> out(u.size());
    bool any_i = false;
    bool any_ii = false;
    for (std::size_t j = 0; j < u.size(); ++j) {
        const double d_lo = u.level(j).lo - v.level(j).lo;
        const double d_hi = u.level(j).hi - v.level(j).hi;
        if (d_lo <= d_hi) {
            out[j] = {d_lo, d_hi};
            any_i = any_i || d_lo < d_hi;
        } else {
            out[j] = {d_hi, d_lo};
            any_ii = true;
        }
    }
    GhCase summary = GhCase::CaseI;
    if (any_ii) {
        summary = any_i ? GhCase::Mixed : GhCase::CaseII;
    }
    return {FuzzyNumber::from_levels_tolerant(std::move(out), kGhMonotonicityTol, ErrorCode::GHDifferenceNotFuzzy),
            summary};
}

FuzzyNumber gh_diff(const FuzzyNumber& u, const FuzzyNumber& v)
{
    return gh_diff_detailed(u, v).value;
}

double hausdorff(const FuzzyNumber& u, const FuzzyNumber& v)
{
    check_same(u, v);
    double d = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
        d = std::max({d, std::abs(u.level(j).lo - v.level(j).lo), std::abs(u.level(j).hi - v.level(j).hi)});
    }
    return d;
}

} // namespace fuzzyts
