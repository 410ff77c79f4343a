#include "pmad/mle.hpp"

#include "pmad/errors.hpp"
#include "pmad/moments.hpp"
#include "pmad/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace pmad {

namespace {

// Sums over x^{2 beta} (ln x)^k held as ln S0 plus weighted means of ln x
// powers, so nothing overflows for large beta ln x.
struct PowerSums {
    double log_s0;
    double m1;
    double m2;
    double m3;

    double s(int k) const {
        const double w = k == 0 ? 1.0 : k == 1 ? m1 : k == 2 ? m2 : m3;
        return std::exp(log_s0) * w;
    }
};

PowerSums power_sums(std::span<const double> xs, double beta) {
    double top = -std::numeric_limits<double>::infinity();
    for (double x : xs) top = std::max(top, 2.0 * beta * std::log(x));
    double w0 = 0.0, w1 = 0.0, w2 = 0.0, w3 = 0.0;
    for (double x : xs) {
        const double lx = std::log(x);
        const double w = std::exp(2.0 * beta * lx - top);
        w0 += w;
        w1 += w * lx;
        w2 += w * lx * lx;
        w3 += w * lx * lx * lx;
    }
    return {top + std::log(w0), w1 / w0, w2 / w0, w3 / w0};
}

double sum_log(std::span<const double> xs) {
    double s = 0.0;
    for (double x : xs) s += std::log(x);
    return s;
}

Sym2 information_from(std::size_t n_, const PowerSums& ps, const Params& p) {
    const double n = static_cast<double>(n_);
    const double a = p.alpha();
    const double b = p.beta();
    return Sym2{
        .aa = 1.5 * n / (a * a),
        .ab = 2.0 * ps.s(1),
        .bb = n / (b * b) + 4.0 * a * ps.s(2),
    };
}

}  // namespace

DataSet::DataSet(std::vector<double> values, std::string label)
    : values_(std::move(values)), label_(std::move(label)) {
    for (double v : values_) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("DataSet: observations must be positive and finite");
        }
    }
}

Sym2 Sym2::inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) throw DomainError("Sym2::inverse: singular matrix");
    return Sym2{.aa = bb / d, .ab = -ab / d, .bb = aa / d};
}

double log_likelihood(const DataSet& d, const Params& p) {
    if (d.empty()) return 0.0;
    const double n = static_cast<double>(d.size());
    const auto ps = power_sums(d.values(), p.beta());
    return n * std::log(4.0) - 0.5 * n * std::log(std::numbers::pi) +
           1.5 * n * std::log(p.alpha()) + n * std::log(p.beta()) - p.alpha() * ps.s(0) +
           (3.0 * p.beta() - 1.0) * sum_log(d.values());
}

Score score(const DataSet& d, const Params& p) {
    const double n = static_cast<double>(d.size());
    if (d.empty()) return {0.0, 0.0};
    const auto ps = power_sums(d.values(), p.beta());
    return Score{
        .alpha = 1.5 * n / p.alpha() - ps.s(0),
        .beta = n / p.beta() - 2.0 * p.alpha() * ps.s(1) + 3.0 * sum_log(d.values()),
    };
}

Sym2 observed_information(const DataSet& d, const Params& p) {
    if (d.empty()) return {};
    return information_from(d.size(), power_sums(d.values(), p.beta()), p);
}

ThirdDerivatives third_derivatives(const DataSet& d, const Params& p) {
    const double n = static_cast<double>(d.size());
    if (d.empty()) return {0.0, 0.0, 0.0, 0.0};
    const auto ps = power_sums(d.values(), p.beta());
    const double a = p.alpha();
    const double b = p.beta();
    return ThirdDerivatives{
        .l30 = 3.0 * n / (a * a * a),
        .l21 = 0.0,
        .l12 = -4.0 * ps.s(2),
        .l03 = 2.0 * n / (b * b * b) - 8.0 * a * ps.s(3),
    };
}

double profile_alpha(const DataSet& d, double beta) {
    if (d.empty()) throw DomainError("profile_alpha: empty data set");
    if (!(beta > 0.0)) throw DomainError("profile_alpha: beta must be positive");
    const auto ps = power_sums(d.values(), beta);
    return std::exp(std::log(1.5 * static_cast<double>(d.size())) - ps.log_s0);
}

double profile_score(const DataSet& d, double beta) {
    if (d.empty()) throw DomainError("profile_score: empty data set");
    if (!(beta > 0.0)) throw DomainError("profile_score: beta must be positive");
    const double n = static_cast<double>(d.size());
    const auto ps = power_sums(d.values(), beta);
    // 2 alpha_hat S1 = 3 n S1 / S0 = 3 n m1
    return n / beta - 3.0 * n * ps.m1 + 3.0 * sum_log(d.values());
}

namespace {

// Derivative of profile_score.
double profile_score_slope(const DataSet& d, double beta) {
    const double n = static_cast<double>(d.size());
    const auto ps = power_sums(d.values(), beta);
    const double var = std::max(0.0, ps.m2 - ps.m1 * ps.m1);
    return -n / (beta * beta) - 6.0 * n * var;
}

double starting_beta(const DataSet& d) {
    // Var(ln X) = psi'(3/2) / (4 beta^2) does not involve alpha.
    const double n = static_cast<double>(d.size());
    double mean = 0.0;
    for (double x : d.values()) mean += std::log(x);
    mean /= n;
    double var = 0.0;
    for (double x : d.values()) var += (std::log(x) - mean) * (std::log(x) - mean);
    var /= n;
    if (!(var > 0.0)) return 1.0;
    return 0.5 * std::sqrt(special::trigamma(1.5) / var);
}

void fill_derived(FitResult& fit, const DataSet& d) {
    const Params p = fit.params();
    const auto ps = power_sums(d.values(), p.beta());
    fit.loglik = log_likelihood(d, p);
    fit.info_matrix = information_from(fit.n, ps, p);
    if (fit.info_matrix.positive_definite()) {
        const Sym2 cov = fit.info_matrix.inverse();
        fit.var_alpha = cov.aa;
        fit.var_beta = cov.bb;
        fit.cov_alpha_beta = cov.ab;
        if (auto ci = confidence_interval(fit, fit.level)) {
            fit.ci_alpha = ci->first;
            fit.ci_beta = ci->second;
        }
    } else {
        fit.info_singular = true;
    }
    fit.mttf_hat = mtsf(p);
    fit.r_hat_at_t = survival(p, fit.t_eval);
    fit.h_hat_at_t = fit.r_hat_at_t > 0.0 ? pdf(p, fit.t_eval) / fit.r_hat_at_t
                                          : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

FitResult fit_mle(const DataSet& d, const FitOptions& opts) {
    if (d.size() < 3) throw DomainError("fit_mle: need at least three observations");
    if (!(opts.level > 0.0 && opts.level < 1.0)) throw DomainError("fit_mle: level must lie in (0, 1)");
    if (!(opts.t_eval > 0.0)) throw DomainError("fit_mle: t_eval must be positive");

    FitResult fit;
    fit.n = d.size();
    fit.level = opts.level;
    fit.t_eval = opts.t_eval;

    int iter = 0;
    const double start = starting_beta(d);
    double lo = start;
    double hi = start;
    double g_lo = profile_score(d, lo);
    double g_hi = g_lo;
    while (g_lo <= 0.0 && iter < opts.max_iterations) {
        hi = lo;
        g_hi = g_lo;
        lo *= 0.5;
        g_lo = profile_score(d, lo);
        ++iter;
    }
    while (g_hi >= 0.0 && iter < opts.max_iterations) {
        lo = hi;
        g_lo = g_hi;
        hi *= 2.0;
        g_hi = profile_score(d, hi);
        ++iter;
    }

    double beta = start;
    bool converged = false;
    if (g_lo > 0.0 && g_hi < 0.0) {
        beta = std::clamp(start, lo, hi);
        while (iter < opts.max_iterations) {
            ++iter;
            const double g = profile_score(d, beta);
            if (g == 0.0) {
                converged = true;
                break;
            }
            if (g > 0.0) {
                lo = beta;
            } else {
                hi = beta;
            }
            double next = beta - g / profile_score_slope(d, beta);
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            const bool done = std::abs(next - beta) <= 1e-14 * beta || hi - lo <= 1e-15 * hi;
            beta = next;
            if (done) {
                converged = true;
                break;
            }
        }
    } else {
        // No sign change: the profile likelihood keeps increasing toward the
        // edge of the search range. Report the best iterate.
        beta = g_hi >= 0.0 ? hi : lo;
    }

    fit.converged = converged;
    fit.iterations = iter;
    fit.beta_hat = beta;
    fit.alpha_hat = profile_alpha(d, beta);
    if (!std::isfinite(fit.alpha_hat) || !(fit.alpha_hat > 0.0) || !std::isfinite(beta)) {
        fit.converged = false;
        return fit;
    }
    fill_derived(fit, d);
    return fit;
}

std::optional<std::pair<Interval, Interval>> confidence_interval(const FitResult& fit,
                                                                 double level) {
    if (!(level > 0.0 && level < 1.0)) throw DomainError("confidence_interval: level must lie in (0, 1)");
    if (!fit.var_alpha || !fit.var_beta) return std::nullopt;
    const double z = special::normal_quantile(0.5 + 0.5 * level);
    const double ha = z * std::sqrt(*fit.var_alpha);
    const double hb = z * std::sqrt(*fit.var_beta);
    return std::pair{Interval{fit.alpha_hat - ha, fit.alpha_hat + ha},
                     Interval{fit.beta_hat - hb, fit.beta_hat + hb}};
}

}  // namespace pmad
