#ifndef FUZZYTS_LIMITS_HPP
#define FUZZYTS_LIMITS_HPP

#include "fuzzyts/config.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace fuzzyts::detail {

// Limit of a vector-valued sequence sampled at h_k = h_start / 2^k.
//
// Successive samples are combined by a three-step Richardson table over the
// last four samples (removing the h, h^2 and h^3 terms of a smooth
// expansion); the limit is accepted once two consecutive extrapolated values
// are within cfg.limit_tol in max-norm. The window is local, so sequences
// that only converge like O(h) still converge; oscillating sequences do not.
//
// `sample` receives the probe distance h and returns the flattened value.
// Returns nullopt when cfg.max_refinements halvings do not converge.
std::optional<std::vector<double>> richardson_limit(const std::function<std::vector<double>(double)>& sample,
                                                    double h_start, const NumericConfig& cfg);

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b);

} // namespace fuzzyts::detail

#endif
