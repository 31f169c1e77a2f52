#ifndef FUZZYTS_THEOREMS_HPP
#define FUZZYTS_THEOREMS_HPP

#include "fuzzyts/calculus.hpp"
#include "fuzzyts/config.hpp"
#include "fuzzyts/funcspec.hpp"
#include "fuzzyts/fuzzy.hpp"
#include "fuzzyts/integral.hpp"
#include "fuzzyts/report.hpp"
#include "fuzzyts/timescale.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fuzzyts {

inline const std::vector<double> kStandardAlphaGrid = {0.0, 0.25, 0.5, 0.75, 1.0};

// ---- derivative of the integral ------------------------------------------

// F(t) = integral of h over [t0, t], then its diamond-alpha derivative at t.
// F is evaluated relative to F(t) so that difference quotients only see the
// small integrals over [t, t +/- h].
FuzzyNumber integral_derivative_lhs(const FuzzyFn& h, const TimeScale& T, double t0, double t, double alpha,
                                    const NumericConfig& cfg);

// (1 - 2a + 2a^2) h(t) + s a (1 - a) C(t), where C combines one-sided limits
// and jump values by point class and s = +1 (s = -1 gives the flipped-sign
// variant used as a negative control).
FuzzyNumber integral_derivative_rhs(const FuzzyFn& h, const TimeScale& T, double t, double alpha,
                                    const NumericConfig& cfg, bool flipped_sign = false);

CheckReport check_derivative_of_integral(const FuzzyFn& h, const TimeScale& T, double t0,
                                         const std::vector<double>& points, const std::vector<double>& alpha_grid,
                                         const NumericConfig& cfg);

// ---- fundamental theorem ---------------------------------------------------

struct FtcBreakdown {
    double alpha = 0.0;
    int ftc_case = 0; // 1: b < 0, 2: a >= 0, 3: straddles c; 0: homogeneous form
    FuzzyNumber main_term = FuzzyNumber::crisp(0.0, 1);
    FuzzyNumber h_alpha = FuzzyNumber::crisp(0.0, 1);
    FuzzyNumber rhs = FuzzyNumber::crisp(0.0, 1);
    double m1 = 1.0;
    double m2 = 1.0;
    std::optional<double> c;
};

struct FtcResult {
    CheckReport report;
    std::vector<FtcBreakdown> breakdowns; // one per alpha
};

// Integral over [a,b] of the diamond-alpha derivative of F.
FuzzyNumber ftc_lhs(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha, const NumericConfig& cfg);

struct NablaSigmaScan {
    double m1 = 1.0; // common value over t < 0 in [a,b]
    double m2 = 1.0; // common value over t >= 0 in [a,b]
    bool has_negative = false;
    bool has_nonnegative = false;
};
// Throws NotQuasiRegular, NablaSigmaNotPiecewiseConstant.
NablaSigmaScan scan_nabla_sigma(const TimeScale& T, double a, double b);

FtcBreakdown ftc_rhs_quasi_regular(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha);
// Case 3 evaluated as two independent windows [a,c] and [c,b]. Off by
// a(1-a)(F(sigma c) - F(c))(1/m1 - 1/m2) from the exact value.
FuzzyNumber ftc_rhs_quasi_regular_naive_split(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha);
FtcBreakdown ftc_rhs_homogeneous(const FuzzyFn& F, const TimeScale& T, double a, double b, double alpha);

FtcResult check_ftc_quasi_regular(const FuzzyFn& F, const TimeScale& T, double a, double b,
                                  const std::vector<double>& alpha_grid, const NumericConfig& cfg);
FtcResult check_ftc_homogeneous(const FuzzyFn& F, const TimeScale& T, double a, double b,
                                const std::vector<double>& alpha_grid, const NumericConfig& cfg);

// ---- product rule and integration by parts -------------------------------

FuzzyNumber product_rule_rhs(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double s, double alpha,
                             const NumericConfig& cfg);
CheckReport check_product_rule(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T,
                               const std::vector<double>& points, const std::vector<double>& alpha_grid,
                               const NumericConfig& cfg);

struct IbpSides {
    FuzzyNumber lhs;
    FuzzyNumber rhs;
};
IbpSides integration_by_parts_sides(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double a, double b,
                                    double alpha, const NumericConfig& cfg);
CheckReport check_integration_by_parts(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double a, double b,
                                       const std::vector<double>& alpha_grid, const NumericConfig& cfg);

// ---- integral algebra ------------------------------------------------------

// Linearity, scalar homogeneity (factor k), additivity at m and the metric
// inequality, for each alpha.
CheckReport check_integral_algebra(const FuzzyFn& f, const FuzzyFn& g, const TimeScale& T, double a, double b,
                                   double m, double k, const std::vector<double>& alpha_grid, const NumericConfig& cfg);

// ---- derivative properties -------------------------------------------------

// Existence asymmetry on [-3,-1] u [0,2] and its mirror.
CheckReport check_existence_asymmetry(const NumericConfig& cfg);
// Continuity and one-sided existence wherever the diamond derivative exists;
// agreement of all three derivatives at two-sided dense points.
CheckReport check_diamond_consequences(const FuzzyFn& f, const TimeScale& T, const std::vector<double>& points,
                                       const NumericConfig& cfg);
CheckReport check_sum_scalar_rules(const FuzzyFn& f, const FuzzyFn& g, double c, const TimeScale& T,
                                   const std::vector<double>& points, const std::vector<double>& alpha_grid,
                                   const NumericConfig& cfg);

// Normalized defect of the epsilon-inequality defining the diamond
// derivative, at probe t near s: D(...) / |mu_st nu_st| (raw D when the
// product vanishes).
double diamond_definition_defect(const FuzzyFn& f, const TimeScale& T, double s, double t, double alpha,
                                 const FuzzyNumber& derivative);

// ---- kernel and quadrature -------------------------------------------------

CheckReport check_gh_kernel(int samples, unsigned seed);
CheckReport check_metric_axioms(int samples, unsigned seed);
CheckReport check_local_steps(const FuzzyFn& f, const TimeScale& T, const std::vector<double>& alpha_grid,
                              const NumericConfig& cfg);
CheckReport check_quadrature_sanity(const NumericConfig& cfg);

// ---- suite -------------------------------------------------------------------

// Scattered points plus 5 interior points per continuous piece, restricted
// to T^kappa_kappa.
std::vector<double> select_test_points(const TimeScale& T);

std::vector<CheckReport> standard_suite(const NumericConfig& cfg);

struct PlotCurve {
    std::string name;
    std::vector<double> t;
    std::vector<FuzzyNumber> values;
};
std::vector<PlotCurve> standard_plots(const NumericConfig& cfg);

} // namespace fuzzyts

#endif
