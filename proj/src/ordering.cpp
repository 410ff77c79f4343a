#include "pmad/ordering.hpp"

#include "pmad/errors.hpp"

#include <cmath>

namespace pmad {

OrderingCheck check_stochastic_order(const Params& first, const Params& second,
                                     std::span<const double> grid) {
    if (grid.size() < 2) throw DomainError("check_stochastic_order: grid needs two points");
    OrderingCheck out{true, true, true, true};
    double prev = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double x = grid[i];
        if (!(x > 0.0) || (i > 0 && !(x > grid[i - 1]))) {
            throw DomainError("check_stochastic_order: grid must be positive and ascending");
        }
        const double log_ratio = log_pdf(first, x) - log_pdf(second, x);
        if (i > 0) {
            const double slack = 1e-12 * (1.0 + std::abs(prev));
            if (log_ratio > prev + slack) out.lr_decreasing = false;
            if (log_ratio < prev - slack) out.lr_increasing = false;
        }
        prev = log_ratio;

        if (cdf(first, x) < cdf(second, x) - 1e-15) out.cdf_dominates = false;

        const double s1 = survival(first, x);
        const double s2 = survival(second, x);
        if (s1 > 0.0 && s2 > 0.0) {
            const double h1 = pdf(first, x) / s1;
            const double h2 = pdf(second, x) / s2;
            if (h1 < h2 * (1.0 - 1e-12)) out.hazard_dominates = false;
        }
    }
    return out;
}

}  // namespace pmad
