#pragma once

#include "pmad/distribution.hpp"

namespace pmad {

enum class EntropyKind { renyi, delta, generalized };

/// Order parameter of an entropy family, validated on construction.
/// renyi and delta need order > 0, order != 1; generalized needs order
/// outside {0, 1}.
class EntropyOrder {
public:
    EntropyOrder(EntropyKind kind, double order);

    EntropyKind kind() const noexcept { return kind_; }
    double order() const noexcept { return order_; }

private:
    EntropyKind kind_;
    double order_;
};

/// ln int_0^inf f(x)^order dx by quadrature. Throws DivergenceError when
/// order (3 beta - 1) <= -1.
double log_power_integral(const Params& p, double order);

/// (1 / (1 - delta)) ln int f^delta.
double renyi_entropy(const Params& p, double delta);

/// (1 - int f^delta) / (delta - 1).
double delta_entropy(const Params& p, double delta);

/// (nu_lambda mu^{-lambda} - 1) / (lambda (lambda - 1)), nu_lambda = E[X^lambda].
double generalized_entropy(const Params& p, double lambda);

/// Dispatch on an EntropyOrder.
double entropy(const Params& p, const EntropyOrder& order);

/// Differential entropy -int f ln f, the order -> 1 limit of the families above.
double shannon_entropy(const Params& p);

namespace closed_form {

/// ln int f^delta from the gamma integral:
///   delta ln(4 beta / sqrt(pi)) + (3 delta / 2) ln alpha - ln(2 beta)
///   - s ln(delta alpha) + ln Gamma(s),  s = (delta (3 beta - 1) + 1) / (2 beta).
double log_power_integral(const Params& p, double delta);
double renyi_entropy(const Params& p, double delta);
double delta_entropy(const Params& p, double delta);

}  // namespace closed_form

}  // namespace pmad
