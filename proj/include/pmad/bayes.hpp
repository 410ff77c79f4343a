#pragma once

#include "pmad/mle.hpp"

#include <utility>

namespace pmad {

/// Independent gamma priors: alpha ~ Gamma(a, rate b), beta ~ Gamma(c, rate d).
struct GammaPrior {
    GammaPrior(double a, double b, double c, double d);

    double a;
    double b;
    double c;
    double d;

    double mean_alpha() const noexcept { return a / b; }
    double mean_beta() const noexcept { return c / d; }
    double variance_alpha() const noexcept { return a / (b * b); }
    double variance_beta() const noexcept { return c / (d * d); }
};

/// Matches each gamma prior to a mean and a common variance:
/// shape = m^2 / v, rate = m / v.
GammaPrior elicit_hyperparams(double prior_mean_alpha, double prior_mean_beta,
                              double prior_variance);

/// ln L(alpha, beta) + ln g(alpha, beta), up to an additive constant.
double log_posterior_kernel(const DataSet& d, const GammaPrior& prior, const Params& p);

/// How the Lindley expansion obtains tau. matrix_inverse uses the inverse
/// of the observed information; reciprocal_elements takes 1 / I_ij
/// entrywise and exists only to compare against it.
enum class TauVariant { matrix_inverse, reciprocal_elements };

struct LindleyEstimate {
    double alpha;
    double beta;
    FitResult mle;
};

/// Lindley's approximation to the posterior means under squared-error loss,
/// expanded around the MLE. Throws ConvergenceError when the MLE does not
/// converge and DomainError when the information matrix is singular.
LindleyEstimate lindley_estimate(const DataSet& d, const GammaPrior& prior,
                                 TauVariant variant = TauVariant::matrix_inverse);

struct OracleOptions {
    int nodes = 201;               ///< trapezoid nodes per axis
    double half_width_sd = 10.0;   ///< box half-width in posterior sd (log scale)
};

struct PosteriorMeans {
    double alpha;
    double beta;
    bool box_expanded;
};

/// E[alpha | x] and E[beta | x] by tensor-product trapezoid quadrature in
/// (ln alpha, ln beta) around the posterior mode. The box grows once if
/// the density on its boundary is not negligible; BoxEscapeError if it
/// still is afterwards. Works for empty data (prior only).
PosteriorMeans posterior_mean_oracle(const DataSet& d, const GammaPrior& prior,
                                     const OracleOptions& opts = {});

struct BayesResult {
    double alpha_lindley;
    double beta_lindley;
    double alpha_oracle;
    double beta_oracle;
    std::pair<double, double> oracle_abs_gap;
};

/// Lindley estimates together with the quadrature posterior means.
BayesResult fit_bayes_lindley(const DataSet& d, const GammaPrior& prior);

}  // namespace pmad
