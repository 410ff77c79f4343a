#include "pmad/distribution.hpp"

#include "pmad/errors.hpp"
#include "pmad/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pmad {

namespace {

// ln(4 / sqrt(pi))
const double kLogNorm = std::log(4.0) - 0.5 * std::log(std::numbers::pi);

void check_x(double x, const char* what) {
    if (!(x >= 0.0)) throw DomainError(std::string(what) + ": x must be nonnegative");
}

}  // namespace

Params::Params(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("Params: alpha must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("Params: beta must be positive");
}

double gamma_argument(const Params& p, double x) {
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    return p.alpha() * std::exp(2.0 * p.beta() * std::log(x));
}

double log_pdf(const Params& p, double x) {
    check_x(x, "log_pdf");
    const double power = 3.0 * p.beta() - 1.0;
    const double log_const = kLogNorm + 1.5 * std::log(p.alpha()) + std::log(p.beta());
    if (x == 0.0) {
        if (power > 0.0) return -std::numeric_limits<double>::infinity();
        if (power == 0.0) return log_const;
        throw DomainError("log_pdf: density is unbounded at x = 0 when beta < 1/3");
    }
    if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
    return log_const + power * std::log(x) - gamma_argument(p, x);
}

double pdf(const Params& p, double x) {
    return std::exp(log_pdf(p, x));
}

double cdf(const Params& p, double x) {
    check_x(x, "cdf");
    return special::reg_lower_gamma(1.5, gamma_argument(p, x));
}

double survival(const Params& p, double x) {
    check_x(x, "survival");
    return special::reg_upper_gamma(1.5, gamma_argument(p, x));
}

double hazard(const Params& p, double x) {
    check_x(x, "hazard");
    const double s = survival(p, x);
    if (s == 0.0) throw OverflowError("hazard: survival underflows to zero");
    return pdf(p, x) / s;
}

double reverse_hazard(const Params& p, double x) {
    check_x(x, "reverse_hazard");
    const double f = cdf(p, x);
    if (f == 0.0) throw DomainError("reverse_hazard: cdf is zero");
    return pdf(p, x) / f;
}

double odds(const Params& p, double x) {
    check_x(x, "odds");
    const double s = survival(p, x);
    if (s == 0.0) throw OverflowError("odds: survival underflows to zero");
    return cdf(p, x) / s;
}

double quantile(const Params& p, double prob) {
    if (!(prob >= 0.0 && prob < 1.0)) {
        throw DomainError("quantile: probability must lie in [0, 1)");
    }
    if (prob == 0.0) return 0.0;
    const double z = special::inv_reg_lower_gamma(1.5, prob);
    return std::exp(std::log(z / p.alpha()) / (2.0 * p.beta()));
}

double maxwell_pdf(double alpha, double z) {
    if (!(alpha > 0.0)) throw DomainError("maxwell_pdf: alpha must be positive");
    check_x(z, "maxwell_pdf");
    return 4.0 / std::sqrt(std::numbers::pi) * std::pow(alpha, 1.5) * z * z *
           std::exp(-alpha * z * z);
}

double maxwell_cdf(double alpha, double z) {
    if (!(alpha > 0.0)) throw DomainError("maxwell_cdf: alpha must be positive");
    check_x(z, "maxwell_cdf");
    return special::reg_lower_gamma(1.5, alpha * z * z);
}

Sampler::Sampler(Params params, std::uint64_t seed) : params_(params), engine_(seed) {}

double Sampler::draw() {
    double g = gamma_(engine_);
    // Gamma(3/2) is almost surely positive; guard the measure-zero case.
    while (!(g > 0.0)) g = gamma_(engine_);
    return std::exp(std::log(g / params_.alpha()) / (2.0 * params_.beta()));
}

std::vector<double> Sampler::sample(std::size_t n) {
    if (n == 0) throw DomainError("sample: n must be at least 1");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(draw());
    return out;
}

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace pmad
