#include "pmad/special.hpp"

#include "pmad/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace pmad::special {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
constexpr int kMaxIter = 1'000'000;

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// ln of the common prefactor z^a e^{-z} / Gamma(a).
double log_prefactor(double a, double z) {
    return a * std::log(z) - z - log_gamma(a);
}

double lower_series(double a, double z) {
    double ap = a;
    double term = 1.0 / a;
    double sum = term;
    for (int i = 0; i < kMaxIter; ++i) {
        ap += 1.0;
        term *= z / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(log_prefactor(a, z));
        }
    }
    throw ConvergenceError("reg_lower_gamma: series did not converge");
}

double upper_continued_fraction(double a, double z) {
    double b = z + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return std::exp(log_prefactor(a, z)) * h;
        }
    }
    throw ConvergenceError("reg_upper_gamma: continued fraction did not converge");
}

void check_gamma_args(double a, double z) {
    if (!(a > 0.0)) throw DomainError("incomplete gamma: shape must be positive");
    if (!(z >= 0.0)) throw DomainError("incomplete gamma: argument must be nonnegative");
}

}  // namespace

double log_gamma(double a) {
    if (!(a > 0.0)) throw DomainError("log_gamma: argument must be positive");
    if (std::isinf(a)) return a;
    if (a < 0.5) {
        return log_gamma(a + 1.0) - std::log(a);
    }
    const double x = a - 1.0;
    double series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (x + static_cast<double>(i));
    }
    const double t = x + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x + 0.5) * std::log(t) - t +
           std::log(series);
}

double reg_lower_gamma(double a, double z) {
    check_gamma_args(a, z);
    if (z == 0.0) return 0.0;
    if (std::isinf(z)) return 1.0;
    if (z < a + 1.0) return lower_series(a, z);
    return 1.0 - upper_continued_fraction(a, z);
}

double reg_upper_gamma(double a, double z) {
    check_gamma_args(a, z);
    if (z == 0.0) return 1.0;
    if (std::isinf(z)) return 0.0;
    if (z < a + 1.0) return 1.0 - lower_series(a, z);
    return upper_continued_fraction(a, z);
}

double inv_reg_lower_gamma(double a, double p) {
    if (!(a > 0.0)) throw DomainError("inv_reg_lower_gamma: shape must be positive");
    if (!(p >= 0.0 && p < 1.0)) {
        throw DomainError("inv_reg_lower_gamma: probability must lie in [0, 1)");
    }
    if (p == 0.0) return 0.0;

    double lo = 0.0;
    double hi = std::max(a, 1.0);
    while (reg_lower_gamma(a, hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (std::isinf(hi)) throw ConvergenceError("inv_reg_lower_gamma: bracket overflow");
    }

    const double lg = log_gamma(a);
    double z = std::clamp(a, lo, hi);
    if (z <= lo || z >= hi) z = 0.5 * (lo + hi);
    for (int iter = 0; iter < 300; ++iter) {
        const double diff = reg_lower_gamma(a, z) - p;
        if (diff == 0.0) return z;
        if (diff < 0.0) {
            lo = z;
        } else {
            hi = z;
        }
        const double density = std::exp((a - 1.0) * std::log(z) - z - lg);
        double next = z - diff / density;
        if (!(next > lo && next < hi) || !std::isfinite(next)) {
            next = 0.5 * (lo + hi);
        }
        if (std::abs(next - z) <= 4.0 * kEps * z || hi - lo <= 4.0 * kEps * hi) {
            return next;
        }
        z = next;
    }
    return z;
}

double trigamma(double x) {
    if (!(x > 0.0)) throw DomainError("trigamma: argument must be positive");
    double acc = 0.0;
    while (x < 20.0) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double inv = 1.0 / x;
    const double inv2 = inv * inv;
    return acc + inv + 0.5 * inv2 +
           inv * inv2 * (1.0 / 6.0 - inv2 * (1.0 / 30.0 - inv2 * (1.0 / 42.0 - inv2 / 30.0)));
}

double normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("normal_quantile: p must lie in (0, 1)");

    // Acklam's rational approximation followed by one Halley step.
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double plow = 0.02425;

    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    const double e = normal_cdf(x) - p;
    const double u = e * std::sqrt(2.0 * std::numbers::pi) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

}  // namespace pmad::special
