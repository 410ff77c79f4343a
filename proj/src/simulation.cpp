#include "pmad/simulation.hpp"

#include "pmad/bayes.hpp"
#include "pmad/errors.hpp"
#include "pmad/mle.hpp"
#include "pmad/moments.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

namespace pmad {

void SimConfig::validate() const {
    if (replications < 100) throw DomainError("SimConfig: replications must be at least 100");
    if (n < 3) throw DomainError("SimConfig: n must be at least 3");
    if (!(level > 0.0 && level < 1.0)) throw DomainError("SimConfig: level must lie in (0, 1)");
    if (!(prior_variance > 0.0)) throw DomainError("SimConfig: prior_variance must be positive");
    if (!(t_eval > 0.0)) throw DomainError("SimConfig: t_eval must be positive");
}

std::uint64_t replication_seed(std::uint64_t master, std::size_t rep) noexcept {
    return mix_seed(master, static_cast<std::uint64_t>(rep));
}

namespace {

struct Replicate {
    bool converged = false;
    double alpha = 0.0, beta = 0.0, mttf = 0.0, r = 0.0, h = 0.0;
    std::optional<Interval> ci_alpha, ci_beta;
    std::optional<double> alpha_bl, beta_bl;
};

Replicate replicate(const SimConfig& cfg, const GammaPrior* prior, std::size_t rep) {
    Replicate out;
    Sampler sampler(cfg.true_params, replication_seed(cfg.seed, rep));
    const DataSet d(sampler.sample(cfg.n));
    FitResult fit;
    try {
        fit = fit_mle(d, FitOptions{.t_eval = cfg.t_eval, .level = cfg.level});
    } catch (const ConvergenceError&) {
        return out;
    }
    if (!fit.converged || !std::isfinite(fit.h_hat_at_t)) return out;
    out.converged = true;
    out.alpha = fit.alpha_hat;
    out.beta = fit.beta_hat;
    out.mttf = fit.mttf_hat;
    out.r = fit.r_hat_at_t;
    out.h = fit.h_hat_at_t;
    out.ci_alpha = fit.ci_alpha;
    out.ci_beta = fit.ci_beta;
    if (prior) {
        try {
            const auto bl = lindley_estimate(d, *prior);
            if (std::isfinite(bl.alpha) && std::isfinite(bl.beta)) {
                out.alpha_bl = bl.alpha;
                out.beta_bl = bl.beta;
            }
        } catch (const std::exception&) {
        }
    }
    return out;
}

class Accumulator {
public:
    explicit Accumulator(double truth) : truth_(truth) {}

    void add(double v) {
        ++count_;
        sum_ += v;
        sum_sq_err_ += (v - truth_) * (v - truth_);
        values_.push_back(v);
    }

    EstimatorStats finish() const {
        EstimatorStats s;
        s.truth = truth_;
        s.count = count_;
        if (count_ == 0) return s;
        const double n = static_cast<double>(count_);
        s.avg = sum_ / n;
        s.mse = sum_sq_err_ / n;
        if (count_ > 1) {
            double ss = 0.0;
            for (double v : values_) ss += (v - s.avg) * (v - s.avg);
            s.se = std::sqrt(ss / (n - 1.0) / n);
        }
        return s;
    }

private:
    double truth_;
    std::size_t count_ = 0;
    double sum_ = 0.0;
    double sum_sq_err_ = 0.0;
    std::vector<double> values_;
};

void add_interval(IntervalStats& s, const Interval& ci, double truth) {
    ++s.count;
    s.avg_lower += ci.lower;
    s.avg_upper += ci.upper;
    s.acl += ci.length();
    s.coverage += ci.contains(truth) ? 1.0 : 0.0;
}

void finish_interval(IntervalStats& s) {
    if (s.count == 0) return;
    const double n = static_cast<double>(s.count);
    s.avg_lower /= n;
    s.avg_upper /= n;
    s.acl /= n;
    s.coverage /= n;
}

}  // namespace

SimReport run_study(const SimConfig& cfg) {
    cfg.validate();
    const Params truth = cfg.true_params;

    std::optional<GammaPrior> prior;
    if (cfg.bayes) prior = elicit_hyperparams(truth.alpha(), truth.beta(), cfg.prior_variance);

    std::vector<Replicate> results(cfg.replications);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t i = next++; i < cfg.replications; i = next++) {
            try {
                results[i] = replicate(cfg, prior ? &*prior : nullptr, i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = cfg.replications;
            }
        }
    };

    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, cfg.replications));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    // Reduction in replication order, so the report is bit-identical for
    // any worker count.
    Accumulator a_ml(truth.alpha()), b_ml(truth.beta()), mttf(mtsf(truth)),
        r(survival(truth, cfg.t_eval)), h(hazard(truth, cfg.t_eval)), a_bl(truth.alpha()),
        b_bl(truth.beta());
    SimReport rep;
    rep.config = cfg;
    for (const Replicate& x : results) {
        if (!x.converged) {
            ++rep.convergence_failures;
            continue;
        }
        a_ml.add(x.alpha);
        b_ml.add(x.beta);
        mttf.add(x.mttf);
        r.add(x.r);
        h.add(x.h);
        if (x.ci_alpha) add_interval(rep.ci_alpha, *x.ci_alpha, truth.alpha());
        if (x.ci_beta) add_interval(rep.ci_beta, *x.ci_beta, truth.beta());
        if (cfg.bayes) {
            if (x.alpha_bl) {
                a_bl.add(*x.alpha_bl);
                b_bl.add(*x.beta_bl);
            } else {
                ++rep.bayes_failures;
            }
        }
    }
    if (rep.convergence_failures * 5 > cfg.replications) {
        throw ConvergenceError("run_study: more than 20% of replications failed to converge");
    }
    rep.alpha_ml = a_ml.finish();
    rep.beta_ml = b_ml.finish();
    rep.mttf_ml = mttf.finish();
    rep.r_ml = r.finish();
    rep.h_ml = h.finish();
    rep.alpha_bl = a_bl.finish();
    rep.beta_bl = b_bl.finish();
    finish_interval(rep.ci_alpha);
    finish_interval(rep.ci_beta);
    return rep;
}

}  // namespace pmad
