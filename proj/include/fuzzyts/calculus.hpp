#ifndef FUZZYTS_CALCULUS_HPP
#define FUZZYTS_CALCULUS_HPP

#include "fuzzyts/config.hpp"
#include "fuzzyts/funcspec.hpp"
#include "fuzzyts/fuzzy.hpp"
#include "fuzzyts/report.hpp"
#include "fuzzyts/timescale.hpp"

namespace fuzzyts {

// Offsets of a probe t relative to the jumps at s.
struct JumpContext {
    double s;
    double t;
    double mu_st; // sigma(s) - t
    double nu_st; // t - rho(s)

    static JumpContext at(const TimeScale& T, double s, double t);
};

enum class DerivativeKind { ExactScattered, LimitDense };

const char* derivative_kind_name(DerivativeKind k) noexcept;

struct DerivativeResult {
    FuzzyNumber value;
    DerivativeKind kind;
    GhCase gh_case;
};

// Delta gH derivative at s in T^kappa. Right-scattered s gives the exact
// quotient; otherwise the limit of gH quotients over probes inside T, taken
// from every side on which T accumulates at s.
// Errors: PointNotInScale, PointNotInKappa, GHDifferenceNotFuzzy, NonConvergent.
DerivativeResult delta_gh(const FuzzyFn& f, const TimeScale& T, double s, const NumericConfig& cfg);

// Mirror of delta_gh with rho and nu; requires s in T_kappa.
DerivativeResult nabla_gh(const FuzzyFn& f, const TimeScale& T, double s, const NumericConfig& cfg);

// alpha * Delta + (1 - alpha) * Nabla. alpha = 1 and alpha = 0 delegate to a
// single side and only need the matching kappa condition.
DerivativeResult diamond_alpha_gh(const FuzzyFn& f, const TimeScale& T, double s, double alpha,
                                  const NumericConfig& cfg);

// Real-valued versions for crisp functions (resolution-1 wrapping).
double delta_crisp(const std::function<double(double)>& g, const TimeScale& T, double s, const NumericConfig& cfg);
double nabla_crisp(const std::function<double(double)>& g, const TimeScale& T, double s, const NumericConfig& cfg);

// f(s +/- h_k) -> f(s) in D_inf along the probe schedule, on every side where
// T accumulates at s. Scattered sides impose nothing.
bool check_continuity_at(const FuzzyFn& f, const TimeScale& T, double s, const NumericConfig& cfg);

// |nu(s) Nabla(Delta g)(s) - mu(s) Delta(Nabla g)(s)|.
CheckReport check_jump_identity(const CrispFn& g, const TimeScale& T, double s, const NumericConfig& cfg);

} // namespace fuzzyts

#endif
