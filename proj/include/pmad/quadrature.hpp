#pragma once

#include <functional>
#include <limits>

namespace pmad::quad {

struct Options {
    double abs_tol = 1e-14;
    double rel_tol = 1e-13;
    int max_depth = 48;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (7/15) integral of f over the finite interval [a, b].
double integrate(const Integrand& f, double a, double b, const Options& opts = {});

/// Integral of f over [lo, hi] with 0 <= lo < hi <= +inf.
///
/// Works in u = ln x on unit-width panels walking outward from ln(scale),
/// so integrable power singularities at 0 and super-polynomially decaying
/// tails are both handled. `scale` should sit near the bulk of the mass.
double integrate_positive(const Integrand& f, double lo, double hi, double scale,
                          const Options& opts = {});

}  // namespace pmad::quad
