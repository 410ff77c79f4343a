#include "pmad/quadrature.hpp"

#include "pmad/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace pmad::quad {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Estimate {
    double value;
    double error;
};

Estimate gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1) gauss += kWg[j / 2] * pair;
    }
    return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

double adapt(const Integrand& f, double a, double b, Estimate whole, double abs_tol,
             double rel_tol, int depth) {
    if (whole.error <= std::max(abs_tol, rel_tol * std::abs(whole.value)) || depth <= 0 ||
        b - a <= 16.0 * std::numeric_limits<double>::epsilon() * std::abs(a)) {
        return whole.value;
    }
    const double mid = 0.5 * (a + b);
    const Estimate left = gauss_kronrod(f, a, mid);
    const Estimate right = gauss_kronrod(f, mid, b);
    // Converged already when the refined pair agrees with the parent.
    const double refined = left.value + right.value;
    if (std::abs(refined - whole.value) <= 1e-3 * std::max(abs_tol, rel_tol * std::abs(refined)) &&
        left.error + right.error <= std::max(abs_tol, rel_tol * std::abs(refined))) {
        return refined;
    }
    return adapt(f, a, mid, left, 0.5 * abs_tol, rel_tol, depth - 1) +
           adapt(f, mid, b, right, 0.5 * abs_tol, rel_tol, depth - 1);
}

}  // namespace

double integrate(const Integrand& f, double a, double b, const Options& opts) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("integrate: limits must be finite");
    }
    if (a == b) return 0.0;
    if (b < a) return -integrate(f, b, a, opts);
    const double value = adapt(f, a, b, gauss_kronrod(f, a, b), opts.abs_tol, opts.rel_tol,
                               opts.max_depth);
    if (!std::isfinite(value)) throw DivergenceError("integrate: non-finite result");
    return value;
}

double integrate_positive(const Integrand& f, double lo, double hi, double scale,
                          const Options& opts) {
    if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("integrate_positive: need 0 <= lo < hi");
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        throw DomainError("integrate_positive: scale must be positive and finite");
    }

    // Largest u with finite e^u.
    constexpr double kUMax = 709.0;
    constexpr double kUMin = -745.0;
    const double u_lo = lo > 0.0 ? std::log(lo) : -std::numeric_limits<double>::infinity();
    const double u_hi = std::isinf(hi) ? std::numeric_limits<double>::infinity() : std::log(hi);
    const double u0 = std::clamp(std::log(scale), std::max(u_lo, kUMin), std::min(u_hi, kUMax));

    const Integrand g = [&f](double u) {
        const double x = std::exp(u);
        const double v = f(x);
        return v == 0.0 ? 0.0 : v * x;
    };

    // Panels get a tiny share of the absolute tolerance; the relative
    // tolerance does the real work.
    Options panel_opts = opts;
    panel_opts.abs_tol = opts.abs_tol * 1e-3;

    double total = 0.0;
    auto walk = [&](double start, double limit, double step) {
        int quiet = 0;
        double prev = 0.0;
        double u = start;
        while (quiet < 3) {
            double next = u + step;
            bool last = false;
            if ((step > 0.0 && next >= limit) || (step < 0.0 && next <= limit)) {
                next = limit;
                last = true;
            }
            const double piece = step > 0.0 ? integrate(g, u, next, panel_opts)
                                            : integrate(g, next, u, panel_opts);
            total += piece;
            if (last) return;
            // Only a decaying tail counts as quiet; tiny but growing panels
            // mean the mass still lies ahead.
            const bool negligible = total != 0.0 && std::abs(piece) <= 1e-17 * std::abs(total);
            quiet = (negligible && std::abs(piece) <= std::abs(prev)) ? quiet + 1 : 0;
            prev = piece;
            u = next;
        }
    };

    walk(u0, std::min(u_hi, kUMax), 1.0);
    walk(u0, std::max(u_lo, kUMin), -1.0);
    if (!std::isfinite(total)) throw DivergenceError("integrate_positive: non-finite result");
    return total;
}

}  // namespace pmad::quad
