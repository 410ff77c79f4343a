#pragma once

#include "pmad/distribution.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace pmad {

struct SimConfig {
    Params true_params{0.75, 0.75};
    std::size_t n = 50;
    std::size_t replications = 5000;
    std::uint64_t seed = 20240101;
    double level = 0.95;
    double prior_variance = 0.5;
    double t_eval = 1.0;
    unsigned workers = 0;  ///< 0 picks std::thread::hardware_concurrency()
    bool bayes = true;

    /// Throws DomainError unless replications >= 100, n >= 3 and the
    /// remaining fields are in range.
    void validate() const;
};

/// Monte-Carlo summary of one estimator.
struct EstimatorStats {
    double truth = 0.0;
    double avg = 0.0;
    double mse = 0.0;
    double se = 0.0;  ///< standard error of avg
    std::size_t count = 0;
};

struct IntervalStats {
    double avg_lower = 0.0;
    double avg_upper = 0.0;
    double acl = 0.0;       ///< average interval length
    double coverage = 0.0;  ///< share of intervals containing the true value
    std::size_t count = 0;
};

struct SimReport {
    SimConfig config;
    EstimatorStats alpha_ml;
    EstimatorStats beta_ml;
    EstimatorStats mttf_ml;
    EstimatorStats r_ml;  ///< R(t_eval)
    EstimatorStats h_ml;  ///< hazard at t_eval
    EstimatorStats alpha_bl;
    EstimatorStats beta_bl;
    IntervalStats ci_alpha;
    IntervalStats ci_beta;
    std::size_t convergence_failures = 0;
    std::size_t bayes_failures = 0;
};

/// Seed of replication `rep`: mix_seed(master, rep). Results depend only on
/// the config, never on worker count or scheduling.
std::uint64_t replication_seed(std::uint64_t master, std::size_t rep) noexcept;

/// Per replication: draw n points, fit by maximum likelihood, derive MTTF,
/// R(t) and hazard by invariance, Wald intervals, and (if cfg.bayes) the
/// Lindley estimates under gamma priors centred at the true values with
/// variance cfg.prior_variance. Non-converged replications are excluded and
/// counted; the study throws ConvergenceError past 20% failures.
SimReport run_study(const SimConfig& cfg);

}  // namespace pmad
