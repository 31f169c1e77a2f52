#include "fuzzyts/limits.hpp"

#include <algorithm>
#include <cmath>

namespace fuzzyts::detail {

namespace {

constexpr int kOrder = 3;
constexpr int kRequiredPasses = 2;

} // namespace

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b)
{
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

std::optional<std::vector<double>> richardson_limit(const std::function<std::vector<double>(double)>& sample,
                                                    double h_start, const NumericConfig& cfg)
{
    std::vector<std::vector<double>> prev_row;
    std::vector<double> last_estimate;
    int passes = 0;
    for (int k = 0; k <= cfg.max_refinements; ++k) {
        const double h = std::ldexp(h_start, -k);
        std::vector<std::vector<double>> row;
        row.reserve(kOrder + 1);
        row.push_back(sample(h));
        const int depth = std::min(k, kOrder);
        for (int j = 1; j <= depth; ++j) {
            const double denom = std::ldexp(1.0, j) - 1.0;
            std::vector<double> next(row[0].size());
            for (std::size_t i = 0; i < next.size(); ++i) {
                next[i] = row[j - 1][i] + (row[j - 1][i] - prev_row[j - 1][i]) / denom;
            }
            row.push_back(std::move(next));
        }
        const auto& estimate = row.back();
        if (k > kOrder) {
            if (max_abs_diff(estimate, last_estimate) <= cfg.limit_tol) {
                if (++passes >= kRequiredPasses) {
                    return estimate;
                }
            } else {
                passes = 0;
            }
        }
        last_estimate = estimate;
        prev_row = std::move(row);
    }
    return std::nullopt;
}

} // namespace fuzzyts::detail
