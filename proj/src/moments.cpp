#include "pmad/moments.hpp"

#include "pmad/errors.hpp"
#include "pmad/quadrature.hpp"
#include "pmad/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace pmad {

namespace {

double log_moment(const Params& p, double order, double log_norm) {
    const double shape = (3.0 * p.beta() + order) / (2.0 * p.beta());
    if (!(shape > 0.0)) throw DomainError("moment: order must satisfy 3 beta + order > 0");
    return log_norm - order / (2.0 * p.beta()) * std::log(p.alpha()) + special::log_gamma(shape);
}

// ln(2 / sqrt(pi_value))
double log_norm_for(double pi_value) {
    return std::log(2.0) - 0.5 * std::log(pi_value);
}

ShapeSummary summarize_moments(const Params& p, double log_norm) {
    std::array<double, 5> m{};
    for (int r = 1; r <= 4; ++r) m[r] = std::exp(log_moment(p, r, log_norm));
    const double mu2 = m[2] - m[1] * m[1];
    const double mu3 = m[3] - 3.0 * m[2] * m[1] + 2.0 * m[1] * m[1] * m[1];
    const double mu4 = m[4] - 4.0 * m[3] * m[1] + 6.0 * m[2] * m[1] * m[1] -
                       3.0 * m[1] * m[1] * m[1] * m[1];
    return ShapeSummary{
        .mean = m[1],
        .variance = mu2,
        .skewness = mu3 * mu3 / (mu2 * mu2 * mu2),
        .kurtosis = mu4 / (mu2 * mu2),
        .mode = mode(p).value,
        .cv = std::sqrt(mu2) / m[1],
    };
}

double quad_scale(const Params& p) {
    return raw_moment(p, 1);
}

}  // namespace

double raw_moment(const Params& p, int r) {
    if (r < 1) throw DomainError("raw_moment: order must be a positive integer");
    return real_moment(p, r);
}

double real_moment(const Params& p, double order) {
    return std::exp(log_moment(p, order, log_norm_for(std::numbers::pi)));
}

CentralMoments central_moments(const Params& p) {
    const double m1 = raw_moment(p, 1);
    const double m2 = raw_moment(p, 2);
    const double m3 = raw_moment(p, 3);
    const double m4 = raw_moment(p, 4);
    return CentralMoments{
        .mu2 = m2 - m1 * m1,
        .mu3 = m3 - 3.0 * m2 * m1 + 2.0 * m1 * m1 * m1,
        .mu4 = m4 - 4.0 * m3 * m1 + 6.0 * m2 * m1 * m1 - 3.0 * m1 * m1 * m1 * m1,
    };
}

std::pair<double, double> skewness_kurtosis(const Params& p) {
    const auto c = central_moments(p);
    return {c.mu3 * c.mu3 / (c.mu2 * c.mu2 * c.mu2), c.mu4 / (c.mu2 * c.mu2)};
}

double coefficient_of_variation(const Params& p) {
    return std::sqrt(central_moments(p).mu2) / raw_moment(p, 1);
}

Mode mode(const Params& p) {
    const double b = p.beta();
    if (3.0 * b - 1.0 <= 0.0) return {0.0, false};
    return {std::pow((3.0 * b - 1.0) / (2.0 * p.alpha() * b), 1.0 / (2.0 * b)), true};
}

double median_empirical(const Params& p) {
    return mode(p).value / 3.0 + 2.0 * raw_moment(p, 1) / 3.0;
}

double mtsf(const Params& p) {
    return raw_moment(p, 1);
}

ShapeSummary shape_summary(const Params& p) {
    return summarize_moments(p, log_norm_for(std::numbers::pi));
}

ShapeSummary shape_summary_with_pi(const Params& p, double pi_value) {
    if (!(pi_value > 0.0)) throw DomainError("shape_summary_with_pi: pi_value must be positive");
    return summarize_moments(p, log_norm_for(pi_value));
}

double mean_deviation(const Params& p) {
    const double mu = raw_moment(p, 1);
    const auto below = [&](double x) { return (mu - x) * pdf(p, x); };
    const auto above = [&](double x) { return (x - mu) * pdf(p, x); };
    return quad::integrate_positive(below, 0.0, mu, mu) +
           quad::integrate_positive(above, mu, std::numeric_limits<double>::infinity(), mu);
}

double mgf(const Params& p, double t) {
    const double two_beta = 2.0 * p.beta();
    const bool converges = two_beta > 1.0 || t <= 0.0 || (two_beta == 1.0 && t < p.alpha());
    if (!converges) throw DivergenceError("mgf: E[exp(tX)] diverges for these arguments");
    if (t == 0.0) return 1.0;
    const auto integrand = [&](double x) {
        return x == 0.0 ? 0.0 : std::exp(t * x + log_pdf(p, x));
    };
    return quad::integrate_positive(integrand, 0.0, std::numeric_limits<double>::infinity(),
                                    quad_scale(p));
}

std::complex<double> cf(const Params& p, double t) {
    if (t == 0.0) return {1.0, 0.0};
    const double inf = std::numeric_limits<double>::infinity();
    const double scale = quad_scale(p);
    const double re = quad::integrate_positive(
        [&](double x) { return x == 0.0 ? 0.0 : std::cos(t * x) * pdf(p, x); }, 0.0, inf, scale);
    const double im = quad::integrate_positive(
        [&](double x) { return x == 0.0 ? 0.0 : std::sin(t * x) * pdf(p, x); }, 0.0, inf, scale);
    return {re, im};
}

double cgf(const Params& p, double t) {
    return std::log(mgf(p, t));
}

double conditional_moment(const Params& p, int r, double k) {
    if (r < 1) throw DomainError("conditional_moment: order must be a positive integer");
    if (!(k >= 0.0)) throw DomainError("conditional_moment: threshold must be nonnegative");
    const double s = survival(p, k);
    if (s == 0.0) throw OverflowError("conditional_moment: survival underflows at threshold");
    const auto integrand = [&](double x) {
        return x == 0.0 ? 0.0 : std::exp(r * std::log(x) + log_pdf(p, x));
    };
    const double scale = std::max(k, quad_scale(p));
    return quad::integrate_positive(integrand, k, std::numeric_limits<double>::infinity(), scale) /
           s;
}

double lorenz_curve(const Params& p, double nu) {
    if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("lorenz_curve: nu must lie in (0, 1]");
    if (nu == 1.0) return 1.0;
    const double mu = raw_moment(p, 1);
    const double q = quantile(p, nu);
    const auto integrand = [&](double x) { return x == 0.0 ? 0.0 : x * pdf(p, x); };
    return quad::integrate_positive(integrand, 0.0, q, std::min(q, mu)) / mu;
}

double bonferroni_curve(const Params& p, double nu) {
    return lorenz_curve(p, nu) / nu;
}

namespace closed_form {

double mean_deviation(const Params& p) {
    const double mu = raw_moment(p, 1);
    const double z = gamma_argument(p, mu);
    const double s1 = (3.0 * p.beta() + 1.0) / (2.0 * p.beta());
    return 2.0 * mu * (special::reg_lower_gamma(1.5, z) - special::reg_lower_gamma(s1, z));
}

double conditional_moment(const Params& p, int r, double k) {
    if (r < 1) throw DomainError("conditional_moment: order must be a positive integer");
    if (!(k >= 0.0)) throw DomainError("conditional_moment: threshold must be nonnegative");
    const double z = gamma_argument(p, k);
    const double s = (3.0 * p.beta() + r) / (2.0 * p.beta());
    const double tail = special::reg_upper_gamma(1.5, z);
    if (tail == 0.0) throw OverflowError("conditional_moment: survival underflows at threshold");
    return raw_moment(p, r) * special::reg_upper_gamma(s, z) / tail;
}

double lorenz_curve(const Params& p, double nu) {
    if (!(nu > 0.0 && nu <= 1.0)) throw DomainError("lorenz_curve: nu must lie in (0, 1]");
    if (nu == 1.0) return 1.0;
    const double s1 = (3.0 * p.beta() + 1.0) / (2.0 * p.beta());
    return special::reg_lower_gamma(s1, gamma_argument(p, quantile(p, nu)));
}

double mgf_series(const Params& p, double t, int terms) {
    double sum = 1.0;
    double log_fact = 0.0;
    for (int r = 1; r < terms; ++r) {
        log_fact += std::log(static_cast<double>(r));
        const double term = std::exp(r * std::log(std::abs(t)) - log_fact) * raw_moment(p, r);
        sum += (t < 0.0 && r % 2 == 1) ? -term : term;
    }
    return sum;
}

}  // namespace closed_form

}  // namespace pmad
