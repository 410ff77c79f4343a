#pragma once

#include "pmad/distribution.hpp"

#include <complex>
#include <numbers>
#include <tuple>

namespace pmad {

/// Moment-based shape descriptors of one PMaD member. cv is a ratio, not a
/// percentage.
struct ShapeSummary {
    double mean;
    double variance;
    double skewness;  ///< Pearson beta_1 = mu_3^2 / mu_2^3 (a squared quantity)
    double kurtosis;  ///< Pearson beta_2 = mu_4 / mu_2^2
    double mode;
    double cv;
};

struct CentralMoments {
    double mu2;
    double mu3;
    double mu4;
};

struct Mode {
    double value;
    bool interior;  ///< false when beta <= 1/3 and the density decreases from 0
};

/// E[X^r] = (2/sqrt(pi)) alpha^{-r/(2 beta)} Gamma((3 beta + r)/(2 beta)).
double raw_moment(const Params& p, int r);

/// Same expression for real order; requires 3 beta + order > 0.
double real_moment(const Params& p, double order);

CentralMoments central_moments(const Params& p);

/// (beta_1, beta_2)
std::pair<double, double> skewness_kurtosis(const Params& p);

double coefficient_of_variation(const Params& p);

Mode mode(const Params& p);

/// Mode-mean empirical relation M0/3 + 2 mu/3. An approximation to the
/// median; falls back to 2 mu / 3 when the mode is at the origin.
double median_empirical(const Params& p);

/// Mean time to system failure, identical to the mean.
double mtsf(const Params& p);

ShapeSummary shape_summary(const Params& p);

/// Shape summary with the density's normalizing constant computed from a
/// caller-supplied value of pi. Tables generated with pi = 3.14
/// are reproduced this way; use shape_summary() for the exact values.
ShapeSummary shape_summary_with_pi(const Params& p, double pi_value);

/// E|X - mu| by quadrature of the definition.
double mean_deviation(const Params& p);

/// Moment generating function E[e^{tX}] by quadrature. Throws
/// DivergenceError unless 2 beta > 1, or t <= 0, or 2 beta = 1 and t < alpha.
double mgf(const Params& p, double t);
std::complex<double> cf(const Params& p, double t);
double cgf(const Params& p, double t);

/// E[X^r | X > k] by quadrature.
double conditional_moment(const Params& p, int r, double k);

/// Lorenz curve L(nu) = (1/mu) int_0^{F^{-1}(nu)} x f(x) dx, nu in (0, 1].
double lorenz_curve(const Params& p, double nu);
/// Bonferroni curve B(nu) = L(nu) / nu.
double bonferroni_curve(const Params& p, double nu);

/// Closed forms derived via incomplete gamma functions. These serve as
/// cross-checks for the quadrature routes above.
namespace closed_form {

/// 2 mu [P(3/2, z_mu) - P((3 beta + 1)/(2 beta), z_mu)], z_mu = alpha mu^{2 beta}.
double mean_deviation(const Params& p);
/// mu'_r Q((3 beta + r)/(2 beta), alpha k^{2 beta}) / Q(3/2, alpha k^{2 beta}).
double conditional_moment(const Params& p, int r, double k);
/// P((3 beta + 1)/(2 beta), alpha q^{2 beta}), q = F^{-1}(nu).
double lorenz_curve(const Params& p, double nu);
/// Truncated series sum_{r < terms} t^r mu'_r / r!.
double mgf_series(const Params& p, double t, int terms);

}  // namespace closed_form

}  // namespace pmad
