#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pmad {

/// One member of the power Maxwell family: scale alpha > 0, shape beta > 0.
///
/// X ~ PMaD(alpha, beta) iff X^beta ~ Maxwell(alpha), with density
///   f(x) = (4 / sqrt(pi)) alpha^{3/2} beta x^{3 beta - 1} exp(-alpha x^{2 beta}).
class Params {
public:
    Params(double alpha, double beta);

    double alpha() const noexcept { return alpha_; }
    double beta() const noexcept { return beta_; }

    friend bool operator==(const Params&, const Params&) = default;

private:
    double alpha_;
    double beta_;
};

/// alpha x^{2 beta}: the gamma(3/2) variate corresponding to x.
double gamma_argument(const Params& p, double x);

double log_pdf(const Params& p, double x);
double pdf(const Params& p, double x);
double cdf(const Params& p, double x);
double survival(const Params& p, double x);

/// f / S. Throws OverflowError once the survival function underflows.
double hazard(const Params& p, double x);
/// f / F. Throws DomainError where F = 0.
double reverse_hazard(const Params& p, double x);
/// F / S.
double odds(const Params& p, double x);

/// Inverse cdf for prob in [0, 1).
double quantile(const Params& p, double prob);

/// Maxwell(alpha) density and cdf, the beta = 1 member.
double maxwell_pdf(double alpha, double z);
double maxwell_cdf(double alpha, double z);

/// Reproducible PMaD variate stream: X = (G / alpha)^{1/(2 beta)} with
/// G ~ Gamma(3/2, 1). Owns its generator, so it is movable but not copyable.
class Sampler {
public:
    Sampler(Params params, std::uint64_t seed);

    Sampler(const Sampler&) = delete;
    Sampler& operator=(const Sampler&) = delete;
    Sampler(Sampler&&) noexcept = default;
    Sampler& operator=(Sampler&&) noexcept = default;

    const Params& params() const noexcept { return params_; }

    double draw();
    std::vector<double> sample(std::size_t n);

private:
    Params params_;
    std::mt19937_64 engine_;
    std::gamma_distribution<double> gamma_{1.5, 1.0};
};

/// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) noexcept;

}  // namespace pmad
