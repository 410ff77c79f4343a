#include "pmad/model_selection.hpp"

#include "pmad/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pmad {

InformationCriteria information_criteria(double neg_loglik, int k, std::size_t n) {
    if (k < 0) throw DomainError("information_criteria: k must be nonnegative");
    if (n == 0) throw DomainError("information_criteria: n must be positive");
    const double kd = k;
    const double nd = static_cast<double>(n);
    InformationCriteria ic{
        .aic = 2.0 * kd + 2.0 * neg_loglik,
        .aicc = std::nullopt,
        .bic = kd * std::log(nd) + 2.0 * neg_loglik,
    };
    if (nd > kd + 1.0) ic.aicc = ic.aic + 2.0 * kd * (kd + 1.0) / (nd - kd - 1.0);
    return ic;
}

double ks_statistic(const DataSet& d, const std::function<double(double)>& model_cdf) {
    if (d.empty()) throw DomainError("ks_statistic: empty data set");
    std::vector<double> xs(d.values().begin(), d.values().end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double dmax = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = model_cdf(xs[i]);
        dmax = std::max({dmax, (i + 1) / n - f, f - i / n});
    }
    return std::clamp(dmax, 0.0, 1.0);
}

namespace {

double type7_quantile(const std::vector<double>& sorted, double prob) {
    const double h = (sorted.size() - 1) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - lo) * (sorted[hi] - sorted[lo]);
}

}  // namespace

SampleSummary summarize(const DataSet& d) {
    if (d.empty()) throw DomainError("summarize: empty data set");
    std::vector<double> xs(d.values().begin(), d.values().end());
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : xs) {
        const double dx = x - mean;
        m2 += dx * dx;
        m3 += dx * dx * dx;
        m4 += dx * dx * dx * dx;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;

    SampleSummary s{
        .min = xs.front(),
        .q1 = type7_quantile(xs, 0.25),
        .median = type7_quantile(xs, 0.5),
        .mean = mean,
        .q3 = type7_quantile(xs, 0.75),
        .max = xs.back(),
        .kurtosis = std::nullopt,
        .excess_kurtosis = std::nullopt,
        .skewness = std::nullopt,
    };
    if (m2 > 0.0) {
        s.kurtosis = m4 / (m2 * m2);
        s.excess_kurtosis = *s.kurtosis - 3.0;
        s.skewness = m3 / std::pow(m2, 1.5);
    }
    return s;
}

MaxwellFit fit_maxwell_baseline(const DataSet& d) {
    if (d.empty()) throw DomainError("fit_maxwell_baseline: empty data set");
    const double n = static_cast<double>(d.size());
    double sum_sq = 0.0;
    double sum_log = 0.0;
    for (double z : d.values()) {
        sum_sq += z * z;
        sum_log += std::log(z);
    }
    const double alpha = 1.5 * n / sum_sq;
    const double loglik = n * std::log(4.0) - 0.5 * n * std::log(std::numbers::pi) +
                          1.5 * n * std::log(alpha) + 2.0 * sum_log - alpha * sum_sq;
    return {alpha, -loglik};
}

FittedModel PmadModel::fit(const DataSet& d) const {
    const FitResult r = fit_mle(d);
    if (!r.converged) throw ConvergenceError("PMaD fit did not converge");
    const Params p = r.params();
    return FittedModel{{r.alpha_hat, r.beta_hat}, -r.loglik,
                       [p](double x) { return pmad::cdf(p, x); }};
}

FittedModel MaxwellModel::fit(const DataSet& d) const {
    const MaxwellFit m = fit_maxwell_baseline(d);
    const double alpha = m.alpha_hat;
    return FittedModel{{alpha}, m.neg_loglik, [alpha](double z) { return maxwell_cdf(alpha, z); }};
}

std::vector<std::shared_ptr<const ModelProvider>> default_models() {
    return {std::make_shared<PmadModel>(), std::make_shared<MaxwellModel>()};
}

GofReport gof_report(const DataSet& d, const ModelProvider& model) {
    const FittedModel fitted = model.fit(d);
    const int k = model.parameter_count();
    const auto ic = information_criteria(fitted.neg_loglik, k, d.size());
    return GofReport{
        .model_name = model.name(),
        .params = fitted.params,
        .k = k,
        .n = d.size(),
        .neg_loglik = fitted.neg_loglik,
        .aic = ic.aic,
        .aicc = ic.aicc,
        .bic = ic.bic,
        .ks = ks_statistic(d, fitted.cdf),
    };
}

std::vector<GofReport> gof_reports(
    const DataSet& d, const std::vector<std::shared_ptr<const ModelProvider>>& models) {
    std::vector<GofReport> out;
    out.reserve(models.size());
    for (const auto& m : models) out.push_back(gof_report(d, *m));
    return out;
}

std::vector<GofReport> rank_models(std::vector<GofReport> reports) {
    std::stable_sort(reports.begin(), reports.end(), [](const GofReport& x, const GofReport& y) {
        if (x.aic != y.aic) return x.aic < y.aic;
        if (x.bic != y.bic) return x.bic < y.bic;
        return x.ks < y.ks;
    });
    return reports;
}

}  // namespace pmad
