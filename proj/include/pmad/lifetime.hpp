#pragma once

#include "pmad/distribution.hpp"

namespace pmad {

/// A unit of age t > 0 drawn from `params`.
struct ResidualSpec {
    ResidualSpec(Params params, double t);

    Params params;
    double t;
};

// Residual life X - t given X > t. Throws DomainError when S(t) = 0.
double residual_survival(const ResidualSpec& rs, double x);
double residual_pdf(const ResidualSpec& rs, double x);
double residual_hazard(const ResidualSpec& rs, double x);

// Reversed residual life t - X given X <= t, defined for 0 <= x < t.
double reversed_residual_survival(const ResidualSpec& rs, double x);
double reversed_residual_pdf(const ResidualSpec& rs, double x);
double reversed_residual_hazard(const ResidualSpec& rs, double x);

}  // namespace pmad
