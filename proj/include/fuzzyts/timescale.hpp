#ifndef FUZZYTS_TIMESCALE_HPP
#define FUZZYTS_TIMESCALE_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace fuzzyts {

enum class Side { Left, Right };

// Closed interval [lo, hi] of a time scale. lo == hi is an isolated point.
struct Segment {
    double lo;
    double hi;

    bool degenerate() const noexcept { return lo == hi; }
    double length() const noexcept { return hi - lo; }
    bool operator==(const Segment&) const = default;
};

// S1: left-dense right-scattered, S2: left-scattered right-dense,
// S3: left-scattered right-scattered, S4: left-dense right-dense.
// At min/max the missing side counts as "dense" (sigma(max) = max,
// rho(min) = min); the boundary flags carry the rest.
enum class PointKind { S1, S2, S3, S4 };

const char* kind_name(PointKind kind) noexcept;

struct PointClass {
    PointKind kind;
    bool is_min;
    bool is_max;

    bool right_scattered() const noexcept { return kind == PointKind::S1 || kind == PointKind::S3; }
    bool left_scattered() const noexcept { return kind == PointKind::S2 || kind == PointKind::S3; }
    // True when points of the scale accumulate at t from that side.
    bool right_accumulates() const noexcept { return !right_scattered() && !is_max; }
    bool left_accumulates() const noexcept { return !left_scattered() && !is_min; }
};

struct Homogeneity {
    bool homogeneous;
    double c; // common graininess; meaningful only when homogeneous
};

// A bounded time scale: finite union of disjoint closed intervals, sorted,
// separated by strictly positive gaps. Immutable after construction.
class TimeScale {
public:
    // Membership tolerance; inputs within it are snapped onto the segment.
    static constexpr double kMembershipTol = 1e-12;

    // Sorts, merges overlapping or touching intervals.
    static TimeScale from_intervals(std::span<const Segment> intervals);
    // {a, a+step, ..., b}; b - a must be an integer multiple of step.
    static TimeScale uniform(double a, double b, double step);
    // {-q^k} u {q^k} for k_min <= k <= k_max, q > 1.
    static TimeScale geometric_two_sided(double q, int k_min, int k_max);

    const std::vector<Segment>& segments() const noexcept { return segments_; }
    double min() const noexcept { return segments_.front().lo; }
    double max() const noexcept { return segments_.back().hi; }

    bool contains(double t) const noexcept;
    // Returns the point of T that t denotes; throws PointNotInScale.
    double snap(double t) const;

    double sigma(double t) const;
    double rho(double t) const;
    double mu(double t) const;
    double nu(double t) const;

    PointClass classify(double t) const;
    bool in_kappa_upper(double t) const;
    bool in_kappa_lower(double t) const;
    bool in_kappa_both(double t) const { return in_kappa_upper(t) && in_kappa_lower(t); }

    bool is_quasi_regular() const;
    Homogeneity homogeneity() const;
    bool is_homogeneous() const { return homogeneity().homogeneous; }

    // Nabla derivative of sigma and delta derivative of rho at t.
    double nabla_sigma(double t) const;
    double delta_rho(double t) const;

    // Distance from t to the end of its segment on the given side; zero when
    // that side is scattered or t is at the boundary of T.
    double dense_room(double t, Side side) const;

    // Scattered points in [a,b] exactly, continuous parts at step <= h.
    std::vector<double> grid(double a, double b, double h) const;

    bool operator==(const TimeScale&) const = default;

private:
    explicit TimeScale(std::vector<Segment> segments) : segments_(std::move(segments)) {}

    struct Located {
        std::size_t index;
        double t;
    };
    Located locate(double t) const;

    std::vector<Segment> segments_;
};

TimeScale make_timescale(std::span<const std::pair<double, double>> intervals);

} // namespace fuzzyts

#endif
