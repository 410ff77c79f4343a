#include "pmad/bayes.hpp"

#include "pmad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace pmad {

GammaPrior::GammaPrior(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    for (double v : {a_, b_, c_, d_}) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw DomainError("GammaPrior: hyperparameters must be positive");
        }
    }
}

GammaPrior elicit_hyperparams(double prior_mean_alpha, double prior_mean_beta,
                              double prior_variance) {
    if (!(prior_mean_alpha > 0.0) || !(prior_mean_beta > 0.0) || !(prior_variance > 0.0)) {
        throw DomainError("elicit_hyperparams: means and variance must be positive");
    }
    const double v = prior_variance;
    return GammaPrior(prior_mean_alpha * prior_mean_alpha / v, prior_mean_alpha / v,
                      prior_mean_beta * prior_mean_beta / v, prior_mean_beta / v);
}

double log_posterior_kernel(const DataSet& d, const GammaPrior& prior, const Params& p) {
    return log_likelihood(d, p) + (prior.a - 1.0) * std::log(p.alpha()) - prior.b * p.alpha() +
           (prior.c - 1.0) * std::log(p.beta()) - prior.d * p.beta();
}

LindleyEstimate lindley_estimate(const DataSet& d, const GammaPrior& prior, TauVariant variant) {
    FitResult mle = fit_mle(d);
    if (!mle.converged) throw ConvergenceError("lindley_estimate: MLE did not converge");
    const Params p = mle.params();
    const Sym2 info = mle.info_matrix;
    if (!info.positive_definite()) {
        throw DomainError("lindley_estimate: observed information is singular");
    }

    Sym2 tau;
    if (variant == TauVariant::matrix_inverse) {
        tau = info.inverse();
    } else {
        tau = Sym2{.aa = 1.0 / info.aa, .ab = 1.0 / info.ab, .bb = 1.0 / info.bb};
    }
    const double t[2][2] = {{tau.aa, tau.ab}, {tau.ab, tau.bb}};

    const auto l3 = third_derivatives(d, p);
    // L[i][j][k], symmetric; index 0 = alpha, 1 = beta.
    auto third = [&](int i, int j, int k) {
        const int betas = i + j + k;
        switch (betas) {
            case 0: return l3.l30;
            case 1: return l3.l21;
            case 2: return l3.l12;
            default: return l3.l03;
        }
    };

    const double rho[2] = {(prior.a - 1.0) / p.alpha() - prior.b,
                           (prior.c - 1.0) / p.beta() - prior.d};
    const double mode[2] = {p.alpha(), p.beta()};
    double out[2];
    for (int m = 0; m < 2; ++m) {
        double prior_term = 0.0;
        for (int j = 0; j < 2; ++j) prior_term += rho[j] * t[m][j];
        double skew_term = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) skew_term += third(i, j, k) * t[i][j] * t[k][m];
        out[m] = mode[m] + prior_term + 0.5 * skew_term;
    }
    return LindleyEstimate{out[0], out[1], std::move(mle)};
}

namespace {

// Log posterior density in (u, v) = (ln alpha, ln beta), Jacobian included,
// up to a constant. Everything that depends on the data enters through
// ln S0(beta) = ln sum x^{2 beta} and sum ln x.
class LogPosterior {
public:
    LogPosterior(const DataSet& d, const GammaPrior& prior)
        : xs_(d.values().begin(), d.values().end()), prior_(prior) {
        for (double x : xs_) {
            logs_.push_back(std::log(x));
            sum_log_ += logs_.back();
        }
        n_ = static_cast<double>(xs_.size());
    }

    double alpha_shape() const { return 1.5 * n_ + prior_.a; }

    // sum x^{2 beta} and sum x^{2 beta} ln x
    std::pair<double, double> sums(double beta) const {
        double s0 = 0.0, s1 = 0.0;
        for (double lx : logs_) {
            const double w = std::exp(2.0 * beta * lx);
            s0 += w;
            s1 += w * lx;
        }
        return {s0, s1};
    }

    double value(double u, double v, double s0) const {
        const double beta = std::exp(v);
        return alpha_shape() * u - std::exp(u) * (prior_.b + s0) + (n_ + prior_.c) * v -
               prior_.d * beta + 3.0 * beta * sum_log_;
    }

    double value(double u, double v) const { return value(u, v, sums(std::exp(v)).first); }

    // d/dv of the profile over u.
    double profile_slope(double v) const {
        const double beta = std::exp(v);
        const auto [s0, s1] = sums(beta);
        return (n_ + prior_.c) +
               beta * (3.0 * sum_log_ - prior_.d - 2.0 * alpha_shape() * s1 / (prior_.b + s0));
    }

    double best_u(double v) const {
        return std::log(alpha_shape() / (prior_.b + sums(std::exp(v)).first));
    }

private:
    std::vector<double> xs_;
    std::vector<double> logs_;
    GammaPrior prior_;
    double sum_log_ = 0.0;
    double n_ = 0.0;
};

struct GridResult {
    double alpha;
    double beta;
    double edge_ratio;
};

GridResult integrate_box(const LogPosterior& lp, double u0, double v0, double su, double sv,
                         double half_width, int nodes) {
    const int n = nodes;
    std::vector<double> us(n), vs(n), s0(n);
    for (int i = 0; i < n; ++i) {
        const double frac = -1.0 + 2.0 * i / (n - 1.0);
        us[i] = u0 + half_width * su * frac;
        vs[i] = v0 + half_width * sv * frac;
        s0[i] = lp.sums(std::exp(vs[i])).first;
    }
    std::vector<double> h(static_cast<std::size_t>(n) * n);
    double top = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const double val = lp.value(us[i], vs[j], s0[j]);
            h[static_cast<std::size_t>(j) * n + i] = val;
            top = std::max(top, val);
        }
    }
    double mass = 0.0, ma = 0.0, mb = 0.0, edge = 0.0;
    for (int j = 0; j < n; ++j) {
        const double wj = (j == 0 || j == n - 1) ? 0.5 : 1.0;
        for (int i = 0; i < n; ++i) {
            const double wi = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            const double dens = std::exp(h[static_cast<std::size_t>(j) * n + i] - top);
            if (i == 0 || i == n - 1 || j == 0 || j == n - 1) edge = std::max(edge, dens);
            const double w = wi * wj * dens;
            mass += w;
            ma += w * std::exp(us[i]);
            mb += w * std::exp(vs[j]);
        }
    }
    return {ma / mass, mb / mass, edge};
}

}  // namespace

PosteriorMeans posterior_mean_oracle(const DataSet& d, const GammaPrior& prior,
                                     const OracleOptions& opts) {
    if (opts.nodes < 11) throw DomainError("posterior_mean_oracle: need at least 11 nodes");
    const LogPosterior lp(d, prior);

    // Mode in v by bisection on the profile slope (positive far left).
    double v_lo = -1.0, v_hi = 1.0;
    for (int k = 0; k < 200 && lp.profile_slope(v_lo) <= 0.0; ++k) v_lo -= 2.0;
    for (int k = 0; k < 200 && lp.profile_slope(v_hi) >= 0.0; ++k) v_hi += 2.0;
    if (!(lp.profile_slope(v_lo) > 0.0) || !(lp.profile_slope(v_hi) < 0.0)) {
        throw ConvergenceError("posterior_mean_oracle: cannot bracket posterior mode");
    }
    for (int k = 0; k < 200 && v_hi - v_lo > 1e-13 * (1.0 + std::abs(v_lo)); ++k) {
        const double mid = 0.5 * (v_lo + v_hi);
        (lp.profile_slope(mid) > 0.0 ? v_lo : v_hi) = mid;
    }
    const double v0 = 0.5 * (v_lo + v_hi);
    const double u0 = lp.best_u(v0);

    // Curvature at the mode by central differences.
    const double e = 1e-4;
    const double f0 = lp.value(u0, v0);
    const double huu = (lp.value(u0 + e, v0) - 2.0 * f0 + lp.value(u0 - e, v0)) / (e * e);
    const double hvv = (lp.value(u0, v0 + e) - 2.0 * f0 + lp.value(u0, v0 - e)) / (e * e);
    const double huv = (lp.value(u0 + e, v0 + e) - lp.value(u0 + e, v0 - e) -
                        lp.value(u0 - e, v0 + e) + lp.value(u0 - e, v0 - e)) /
                       (4.0 * e * e);
    const Sym2 neg_hess{.aa = -huu, .ab = -huv, .bb = -hvv};
    if (!neg_hess.positive_definite()) {
        throw ConvergenceError("posterior_mean_oracle: posterior mode is not a maximum");
    }
    const Sym2 cov = neg_hess.inverse();
    const double su = std::sqrt(cov.aa);
    const double sv = std::sqrt(cov.bb);

    constexpr double kEdgeTolerance = 1e-10;
    constexpr double kEscapeTolerance = 1e-4;
    GridResult r = integrate_box(lp, u0, v0, su, sv, opts.half_width_sd, opts.nodes);
    bool expanded = false;
    if (r.edge_ratio > kEdgeTolerance) {
        expanded = true;
        r = integrate_box(lp, u0, v0, su, sv, 2.0 * opts.half_width_sd, opts.nodes);
        if (r.edge_ratio > kEscapeTolerance) {
            throw BoxEscapeError("posterior_mean_oracle: posterior mass escapes the box");
        }
    }
    return PosteriorMeans{r.alpha, r.beta, expanded};
}

BayesResult fit_bayes_lindley(const DataSet& d, const GammaPrior& prior) {
    const auto lind = lindley_estimate(d, prior);
    const auto oracle = posterior_mean_oracle(d, prior);
    return BayesResult{
        .alpha_lindley = lind.alpha,
        .beta_lindley = lind.beta,
        .alpha_oracle = oracle.alpha,
        .beta_oracle = oracle.beta,
        .oracle_abs_gap = {std::abs(lind.alpha - oracle.alpha), std::abs(lind.beta - oracle.beta)},
    };
}

}  // namespace pmad
