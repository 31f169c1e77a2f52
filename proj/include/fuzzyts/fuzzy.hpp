#ifndef FUZZYTS_FUZZY_HPP
#define FUZZYTS_FUZZY_HPP

#include "fuzzyts/error.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace fuzzyts {

struct Interval {
    double lo;
    double hi;

    double width() const noexcept { return hi - lo; }
    bool operator==(const Interval&) const = default;
};

// A fuzzy number stored as M+1 nested r-level intervals at grades r_j = j/M.
//
// Invariants (checked by every public constructor):
//   - lo <= hi at every level,
//   - lower endpoints non-decreasing and upper endpoints non-increasing in j,
//   - the core (j = M) is non-empty.
// Quasiconcavity and upper semicontinuity follow from the nested stack.
class FuzzyNumber {
public:
    static constexpr int kDefaultResolution = 64;

    // Throws NotSorted unless a1 <= a2 <= a3.
    static FuzzyNumber triangular(double a1, double a2, double a3, int resolution = kDefaultResolution);
    static FuzzyNumber crisp(double x, int resolution = kDefaultResolution);
    static FuzzyNumber interval(double lo, double hi, int resolution = kDefaultResolution);

    // Strict validation: LevelMonotonicityViolation or EmptyCore.
    static FuzzyNumber from_levels(std::vector<Interval> levels);

    // Accepts invariant violations up to `tol` and repairs them exactly;
    // anything larger throws `code`. Used for computed results where rounding
    // can disturb the ordering by a few ulps.
    static FuzzyNumber from_levels_tolerant(std::vector<Interval> levels, double tol, ErrorCode code);

    int resolution() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    std::size_t size() const noexcept { return levels_.size(); }
    std::span<const Interval> levels() const noexcept { return levels_; }
    const Interval& level(std::size_t j) const { return levels_.at(j); }
    double grade(std::size_t j) const noexcept
    {
        return static_cast<double>(j) / static_cast<double>(resolution());
    }

    // Level set at an arbitrary grade, linear in r between sampled levels.
    Interval at(double r) const;

    double width(std::size_t j) const { return levels_.at(j).width(); }
    std::vector<double> widths() const;

    bool is_crisp() const noexcept;

    // Re-sample onto a different level grid by linear interpolation.
    FuzzyNumber resampled(int resolution) const;

    bool operator==(const FuzzyNumber&) const = default;

private:
    explicit FuzzyNumber(std::vector<Interval> levels) : levels_(std::move(levels)) {}

    friend FuzzyNumber add(const FuzzyNumber&, const FuzzyNumber&);
    friend FuzzyNumber scalar_mul(double, const FuzzyNumber&);
    friend FuzzyNumber mul(const FuzzyNumber&, const FuzzyNumber&);

    std::vector<Interval> levels_;
};

// Which Hukuhara case produced each level of a gH-difference.
enum class GhCase { CaseI, CaseII, Mixed };

const char* gh_case_name(GhCase c) noexcept;
GhCase combine(GhCase a, GhCase b) noexcept;

struct GhDiffResult {
    FuzzyNumber value;
    GhCase summary;
};

// Tolerance on the level-monotonicity test of gH existence.
inline constexpr double kGhMonotonicityTol = 1e-10;

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);
FuzzyNumber scalar_mul(double k, const FuzzyNumber& u);
FuzzyNumber mul(const FuzzyNumber& u, const FuzzyNumber& v);

// u (-)gH v. Throws GHDifferenceNotFuzzy when the levelwise min/max stack is
// not a fuzzy number.
FuzzyNumber gh_diff(const FuzzyNumber& u, const FuzzyNumber& v);
GhDiffResult gh_diff_detailed(const FuzzyNumber& u, const FuzzyNumber& v);

double hausdorff(const FuzzyNumber& u, const FuzzyNumber& v);

inline FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); }
inline FuzzyNumber operator*(double k, const FuzzyNumber& u) { return scalar_mul(k, u); }
inline FuzzyNumber operator*(const FuzzyNumber& u, const FuzzyNumber& v) { return mul(u, v); }

} // namespace fuzzyts

#endif
