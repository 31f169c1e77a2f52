#include "fuzzyts/config.hpp"

#include "fuzzyts/error.hpp"

namespace fuzzyts {

void NumericConfig::validate() const
{
    if (!(limit_tol > 0.0) || !(h0 > 0.0) || !(quad_tol > 0.0) || !(residual_tol > 0.0)) {
        raise(ErrorCode::SchemaError, "numeric tolerances and h0 must be positive");
    }
    if (max_refinements < 1 || quad_max_depth < 1) {
        raise(ErrorCode::SchemaError, "max_refinements and quad_max_depth must be positive");
    }
    if (level_resolution < 1) {
        raise(ErrorCode::SchemaError, "level_resolution must be at least 1");
    }
}

} // namespace fuzzyts
