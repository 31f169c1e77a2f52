#include "fuzzyts/report.hpp"

#include <cmath>
#include <limits>

namespace fuzzyts {

void CheckReport::record(double point, double alpha, double r)
{
    witnesses.push_back({point, alpha, r});
    if (std::isnan(r) || std::isnan(residual)) {
        residual = std::numeric_limits<double>::quiet_NaN();
    } else if (r > residual) {
        residual = r;
    }
}

void CheckReport::fail_with(std::string code, std::string detail)
{
    error = std::move(code);
    error_detail = std::move(detail);
}

CheckReport& CheckReport::finalize()
{
    pass = !error && !std::isnan(residual) && residual <= tolerance;
    return *this;
}

} // namespace fuzzyts
