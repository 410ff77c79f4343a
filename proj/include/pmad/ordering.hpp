#pragma once

#include "pmad/distribution.hpp"

#include <span>

namespace pmad {

/// Outcome of checking X ~ first against Y ~ second on a grid of x > 0.
struct OrderingCheck {
    bool lr_decreasing;    ///< f_X / f_Y nonincreasing along the grid (X <=_lr Y)
    bool lr_increasing;    ///< f_X / f_Y nondecreasing along the grid (Y <=_lr X)
    bool cdf_dominates;    ///< F_X(x) >= F_Y(x) at every grid point (X <=_st Y)
    bool hazard_dominates; ///< h_X(x) >= h_Y(x) where both are finite (X <=_hr Y)
};

/// Checks the likelihood-ratio, usual stochastic and hazard-rate orders
/// between two PMaD members on the supplied (ascending, positive) grid.
/// The likelihood ratio is compared in log space.
OrderingCheck check_stochastic_order(const Params& first, const Params& second,
                                     std::span<const double> grid);

}  // namespace pmad
