#include "pmad/entropy.hpp"

#include "pmad/errors.hpp"
#include "pmad/moments.hpp"
#include "pmad/quadrature.hpp"
#include "pmad/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace pmad {

namespace {

void check_power_order(double delta) {
    if (!(delta > 0.0) || delta == 1.0) {
        throw DomainError("entropy: order must be positive and different from 1");
    }
}

void check_convergence(const Params& p, double delta) {
    if (!(delta * (3.0 * p.beta() - 1.0) > -1.0)) {
        throw DivergenceError("entropy: int f^order diverges at the origin");
    }
}

}  // namespace

EntropyOrder::EntropyOrder(EntropyKind kind, double order) : kind_(kind), order_(order) {
    if (kind == EntropyKind::generalized) {
        if (order == 0.0 || order == 1.0 || !std::isfinite(order)) {
            throw DomainError("EntropyOrder: generalized entropy needs order outside {0, 1}");
        }
    } else {
        check_power_order(order);
    }
}

double log_power_integral(const Params& p, double order) {
    check_convergence(p, order);
    // Work with f^order / f(scale)^order to keep the integrand O(1).
    const double scale = raw_moment(p, 1);
    const double shift = order * log_pdf(p, scale);
    const auto integrand = [&](double x) { return std::exp(order * log_pdf(p, x) - shift); };
    const double value = quad::integrate_positive(
        integrand, 0.0, std::numeric_limits<double>::infinity(), scale);
    return std::log(value) + shift;
}

double renyi_entropy(const Params& p, double delta) {
    check_power_order(delta);
    return log_power_integral(p, delta) / (1.0 - delta);
}

double delta_entropy(const Params& p, double delta) {
    check_power_order(delta);
    return -std::expm1(log_power_integral(p, delta)) / (delta - 1.0);
}

double generalized_entropy(const Params& p, double lambda) {
    if (lambda == 0.0 || lambda == 1.0) {
        throw DomainError("generalized_entropy: lambda must differ from 0 and 1");
    }
    if (!(3.0 * p.beta() + lambda > 0.0)) {
        throw DomainError("generalized_entropy: requires 3 beta + lambda > 0");
    }
    const double ratio = std::exp(std::log(real_moment(p, lambda)) -
                                  lambda * std::log(raw_moment(p, 1)));
    return (ratio - 1.0) / (lambda * (lambda - 1.0));
}

double entropy(const Params& p, const EntropyOrder& order) {
    switch (order.kind()) {
        case EntropyKind::renyi:
            return renyi_entropy(p, order.order());
        case EntropyKind::delta:
            return delta_entropy(p, order.order());
        case EntropyKind::generalized:
            return generalized_entropy(p, order.order());
    }
    throw DomainError("entropy: unknown kind");
}

double shannon_entropy(const Params& p) {
    const auto integrand = [&](double x) {
        const double lf = log_pdf(p, x);
        return -lf * std::exp(lf);
    };
    return quad::integrate_positive(integrand, 0.0, std::numeric_limits<double>::infinity(),
                                    raw_moment(p, 1));
}

namespace closed_form {

double log_power_integral(const Params& p, double delta) {
    check_convergence(p, delta);
    const double a = p.alpha();
    const double b = p.beta();
    const double s = (delta * (3.0 * b - 1.0) + 1.0) / (2.0 * b);
    return delta * (std::log(4.0 * b) - 0.5 * std::log(std::numbers::pi)) +
           1.5 * delta * std::log(a) - std::log(2.0 * b) - s * std::log(delta * a) +
           special::log_gamma(s);
}

double renyi_entropy(const Params& p, double delta) {
    check_power_order(delta);
    return closed_form::log_power_integral(p, delta) / (1.0 - delta);
}

double delta_entropy(const Params& p, double delta) {
    check_power_order(delta);
    return -std::expm1(closed_form::log_power_integral(p, delta)) / (delta - 1.0);
}

}  // namespace closed_form

}  // namespace pmad
