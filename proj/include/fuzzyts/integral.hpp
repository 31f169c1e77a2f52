#ifndef FUZZYTS_INTEGRAL_HPP
#define FUZZYTS_INTEGRAL_HPP

#include "fuzzyts/config.hpp"
#include "fuzzyts/funcspec.hpp"
#include "fuzzyts/fuzzy.hpp"
#include "fuzzyts/timescale.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace fuzzyts {

using ScalarFn = std::function<double(double)>;
using VectorFn = std::function<std::vector<double>(double)>;

// Decomposition of [a,b] n T into gap terms and continuous pieces.
struct IntegrationPlan {
    std::vector<std::pair<double, double>> scattered_delta_terms; // (t, mu(t)), t right-scattered in [a,b)
    std::vector<std::pair<double, double>> scattered_nabla_terms; // (t, nu(t)), t left-scattered in (a,b]
    std::vector<Segment> continuous_pieces;
};

// Throws PointNotInScale, InvalidBounds (a > b).
IntegrationPlan build_plan(const TimeScale& T, double a, double b);

// Adaptive Simpson of a vector-valued integrand over [lo,hi], one shared
// subdivision, sup-norm error. Throws QuadratureDepthExceeded.
std::vector<double> simpson_vector(const VectorFn& g, double lo, double hi, const NumericConfig& cfg);

// Componentwise Delta, Nabla and diamond-alpha integrals over [a,b].
std::vector<double> delta_int_vector(const VectorFn& g, const TimeScale& T, double a, double b,
                                     const NumericConfig& cfg);
std::vector<double> nabla_int_vector(const VectorFn& g, const TimeScale& T, double a, double b,
                                     const NumericConfig& cfg);
std::vector<double> diamond_int_vector(const VectorFn& g, const TimeScale& T, double a, double b, double alpha,
                                       const NumericConfig& cfg);

double delta_int_scalar(const ScalarFn& g, const TimeScale& T, double a, double b, const NumericConfig& cfg);
double nabla_int_scalar(const ScalarFn& g, const TimeScale& T, double a, double b, const NumericConfig& cfg);
double diamond_int_scalar(const ScalarFn& g, const TimeScale& T, double a, double b, double alpha,
                          const NumericConfig& cfg);

struct FuzzyIntegralResult {
    FuzzyNumber value;
    std::vector<double> per_level_lower;
    std::vector<double> per_level_upper;
};

// Levelwise Aumann diamond-alpha integral.
// Throws IntegrandNotFuzzyAt, ResultNotFuzzy, AlphaOutOfRange, InvalidBounds.
FuzzyIntegralResult diamond_int_fuzzy(const FuzzyFn& f, const TimeScale& T, double a, double b, double alpha,
                                      const NumericConfig& cfg);

struct LocalSteps {
    FuzzyNumber forward;  // over [t, sigma(t)]
    FuzzyNumber backward; // over [rho(t), t]
};

// One-step integrals, cross-checked against mu(t)(alpha f(t) + (1-alpha) f(sigma t))
// and nu(t)(alpha f(rho t) + (1-alpha) f(t)) to 1e-10; ClosedFormMismatch otherwise.
LocalSteps local_step_integrals(const FuzzyFn& f, const TimeScale& T, double t, double alpha,
                                const NumericConfig& cfg);

inline constexpr double kResultFuzzyTol = 1e-9;
inline constexpr double kClosedFormTol = 1e-10;

} // namespace fuzzyts

#endif
