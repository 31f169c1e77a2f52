#ifndef FUZZYTS_CONFIG_HPP
#define FUZZYTS_CONFIG_HPP

namespace fuzzyts {

// Numerical knobs shared by limits, quadrature and the verification harness.
struct NumericConfig {
    double limit_tol = 1e-8;    // Cauchy tolerance for limits (Hausdorff)
    int max_refinements = 40;   // step halvings before a limit is NonConvergent
    double h0 = 1e-2;           // first probe distance
    int level_resolution = 64;  // M; fuzzy numbers carry M+1 levels
    double quad_tol = 1e-9;     // absolute tolerance per continuous piece
    int quad_max_depth = 40;
    double residual_tol = 1e-8; // default verdict tolerance for checks

    // Throws SchemaError when a field is out of range.
    void validate() const;
};

} // namespace fuzzyts

#endif
