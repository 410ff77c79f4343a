#pragma once

#include "pmad/mle.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pmad {

struct InformationCriteria {
    double aic;
    std::optional<double> aicc;  ///< absent when n <= k + 1
    double bic;
};

InformationCriteria information_criteria(double neg_loglik, int k, std::size_t n);

/// Kolmogorov-Smirnov distance between the sample and a model cdf:
/// max_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
double ks_statistic(const DataSet& d, const std::function<double(double)>& model_cdf);

struct SampleSummary {
    double min;
    double q1;
    double median;
    double mean;
    double q3;
    double max;
    std::optional<double> kurtosis;         ///< raw moment ratio m4 / m2^2
    std::optional<double> excess_kurtosis;  ///< kurtosis - 3
    std::optional<double> skewness;         ///< g1 = m3 / m2^{3/2}
};

/// Quartiles by linear interpolation between order statistics (type 7);
/// moment-based skewness and kurtosis, absent for constant data.
SampleSummary summarize(const DataSet& d);

struct MaxwellFit {
    double alpha_hat;
    double neg_loglik;
};

/// Closed-form Maxwell MLE alpha = 3n / (2 sum z^2).
MaxwellFit fit_maxwell_baseline(const DataSet& d);

struct GofReport {
    std::string model_name;
    std::vector<double> params;
    int k = 0;
    std::size_t n = 0;
    double neg_loglik = 0.0;
    double aic = 0.0;
    std::optional<double> aicc;
    double bic = 0.0;
    double ks = 0.0;
};

/// A fitted competitor: its estimates, -log L and cdf.
struct FittedModel {
    std::vector<double> params;
    double neg_loglik;
    std::function<double(double)> cdf;
};

/// Plug-in interface for models entering the goodness-of-fit table.
class ModelProvider {
public:
    virtual ~ModelProvider() = default;
    virtual std::string name() const = 0;
    virtual int parameter_count() const = 0;
    virtual FittedModel fit(const DataSet& d) const = 0;
};

class PmadModel final : public ModelProvider {
public:
    std::string name() const override { return "PMaD"; }
    int parameter_count() const override { return 2; }
    FittedModel fit(const DataSet& d) const override;
};

class MaxwellModel final : public ModelProvider {
public:
    std::string name() const override { return "MaD"; }
    int parameter_count() const override { return 1; }
    FittedModel fit(const DataSet& d) const override;
};

/// The built-in providers (PMaD and MaD).
std::vector<std::shared_ptr<const ModelProvider>> default_models();

GofReport gof_report(const DataSet& d, const ModelProvider& model);

std::vector<GofReport> gof_reports(const DataSet& d,
                                   const std::vector<std::shared_ptr<const ModelProvider>>& models);

/// Ascending by AIC, ties broken by BIC then K-S; stable otherwise.
std::vector<GofReport> rank_models(std::vector<GofReport> reports);

}  // namespace pmad
