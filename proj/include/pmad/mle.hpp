#pragma once

#include "pmad/distribution.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pmad {

/// An ordered sample of positive observations with a provenance label.
class DataSet {
public:
    DataSet() = default;
    explicit DataSet(std::vector<double> values, std::string label = {});

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }
    const std::string& label() const noexcept { return label_; }

private:
    std::vector<double> values_;
    std::string label_;
};

/// Symmetric 2x2 matrix over (alpha, beta).
struct Sym2 {
    double aa = 0.0;
    double ab = 0.0;
    double bb = 0.0;

    double det() const noexcept { return aa * bb - ab * ab; }
    bool positive_definite() const noexcept { return aa > 0.0 && det() > 0.0; }
    Sym2 inverse() const;
};

struct Interval {
    double lower;
    double upper;

    double length() const noexcept { return upper - lower; }
    bool contains(double v) const noexcept { return lower <= v && v <= upper; }
};

/// Partial derivatives of the log-likelihood.
struct Score {
    double alpha;
    double beta;
};

/// Third-order partials l_{ij} = d^3 l / d alpha^i d beta^j.
struct ThirdDerivatives {
    double l30;
    double l21;
    double l12;
    double l03;
};

struct FitOptions {
    double t_eval = 1.0;
    double level = 0.95;
    int max_iterations = 200;
};

struct FitResult {
    double alpha_hat = 0.0;
    double beta_hat = 0.0;
    double loglik = 0.0;
    std::size_t n = 0;
    Sym2 info_matrix;  ///< observed information (negative Hessian) at the optimum
    std::optional<double> var_alpha;
    std::optional<double> var_beta;
    std::optional<double> cov_alpha_beta;
    std::optional<Interval> ci_alpha;
    std::optional<Interval> ci_beta;
    double level = 0.95;
    double t_eval = 1.0;
    double mttf_hat = 0.0;
    double r_hat_at_t = 0.0;
    double h_hat_at_t = 0.0;
    bool converged = false;
    bool info_singular = false;
    int iterations = 0;

    Params params() const { return Params(alpha_hat, beta_hat); }
};

double log_likelihood(const DataSet& d, const Params& p);
Score score(const DataSet& d, const Params& p);
/// Negative Hessian of the log-likelihood.
Sym2 observed_information(const DataSet& d, const Params& p);
ThirdDerivatives third_derivatives(const DataSet& d, const Params& p);

/// Conditional maximizer 3n / (2 sum x^{2 beta}) of the likelihood in alpha.
double profile_alpha(const DataSet& d, double beta);

/// d/d beta of the profiled log-likelihood l(alpha_hat(beta), beta). Strictly
/// decreasing in beta, so it has at most one root.
double profile_score(const DataSet& d, double beta);

/// Maximum likelihood fit by one-dimensional root finding on the profiled
/// score, followed by observed information, Wald intervals and plug-in
/// estimates of MTTF, R(t_eval) and H(t_eval).
///
/// Requires at least three observations. Data without spread in ln x has
/// no interior optimum; the result then has converged = false.
FitResult fit_mle(const DataSet& d, const FitOptions& opts = {});

/// Wald intervals estimate -/+ z_{(1+level)/2} sqrt(var) from a fit's
/// variances. Empty when the information matrix was singular.
std::optional<std::pair<Interval, Interval>> confidence_interval(const FitResult& fit,
                                                                 double level);

}  // namespace pmad
