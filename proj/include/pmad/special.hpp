#pragma once

// Special functions used throughout the library. All functions are pure and
// safe to call concurrently.

namespace pmad::special {

/// ln Gamma(a) for a > 0. Throws DomainError otherwise.
double log_gamma(double a);

/// Regularized lower incomplete gamma P(a, z) = gamma(a, z) / Gamma(a).
///
/// Series expansion for z < a + 1, Lentz continued fraction for the
/// complement otherwise. z may be +infinity (returns 1).
double reg_lower_gamma(double a, double z);

/// Regularized upper incomplete gamma Q(a, z) = 1 - P(a, z), computed
/// directly in the continued-fraction region so small tails keep full
/// relative precision.
double reg_upper_gamma(double a, double z);

/// Inverse of P(a, .): the z >= 0 with P(a, z) = p, for p in [0, 1).
double inv_reg_lower_gamma(double a, double p);

/// Trigamma function psi'(x), x > 0.
double trigamma(double x);

/// Standard normal cdf.
double normal_cdf(double x);

/// Standard normal quantile for p in (0, 1).
double normal_quantile(double p);

}  // namespace pmad::special
