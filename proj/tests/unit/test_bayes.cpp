#include "pmad/bayes.hpp"
#include "pmad/errors.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace pmad;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

DataSet simulate(double a, double b, std::size_t n, std::uint64_t seed) {
    Sampler s(Params(a, b), seed);
    return DataSet(s.sample(n));
}

}  // namespace

TEST_CASE("prior elicitation", "[bayes]") {
    const GammaPrior g = elicit_hyperparams(0.75, 0.75, 0.5);
    CHECK_THAT(g.a, WithinRel(1.125, 1e-15));
    CHECK_THAT(g.b, WithinRel(1.5, 1e-15));
    const GammaPrior u = elicit_hyperparams(1.0, 1.0, 1.0);
    CHECK(u.a == 1.0);
    CHECK(u.b == 1.0);
    const GammaPrior r = elicit_hyperparams(0.4, 2.2, 0.3);
    CHECK_THAT(r.mean_alpha(), WithinRel(0.4, 1e-14));
    CHECK_THAT(r.mean_beta(), WithinRel(2.2, 1e-14));
    CHECK_THAT(r.variance_alpha(), WithinRel(0.3, 1e-14));
    CHECK_THAT(r.variance_beta(), WithinRel(0.3, 1e-14));
    CHECK_THROWS_AS(GammaPrior(0.0, 1.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(elicit_hyperparams(1.0, 1.0, 0.0), DomainError);
}

TEST_CASE("posterior kernel is likelihood plus log prior", "[bayes]") {
    const DataSet d = simulate(0.75, 0.75, 20, 4);
    const GammaPrior g(2.0, 1.0, 3.0, 2.0);
    const Params p1(0.8, 0.7), p2(1.1, 0.9);
    auto log_prior = [&](const Params& p) {
        return (g.a - 1) * std::log(p.alpha()) - g.b * p.alpha() + (g.c - 1) * std::log(p.beta()) -
               g.d * p.beta();
    };
    const double lhs = log_posterior_kernel(d, g, p1) - log_posterior_kernel(d, g, p2);
    const double rhs = log_likelihood(d, p1) + log_prior(p1) - log_likelihood(d, p2) - log_prior(p2);
    CHECK_THAT(lhs, WithinAbs(rhs, 1e-10));
}

TEST_CASE("oracle on empty data returns the prior means", "[bayes]") {
    const GammaPrior g(3.0, 2.0, 5.0, 4.0);
    const PosteriorMeans m = posterior_mean_oracle(DataSet{}, g);
    CHECK_THAT(m.alpha, WithinRel(1.5, 1e-6));
    CHECK_THAT(m.beta, WithinRel(1.25, 1e-6));
}

TEST_CASE("oracle is stable under refinement", "[bayes]") {
    const DataSet d = simulate(0.75, 0.75, 30, 12);
    const GammaPrior g = elicit_hyperparams(0.75, 0.75, 0.5);
    const PosteriorMeans coarse = posterior_mean_oracle(d, g);
    const PosteriorMeans fine = posterior_mean_oracle(d, g, OracleOptions{.nodes = 401});
    CHECK_THAT(fine.alpha, WithinRel(coarse.alpha, 1e-6));
    CHECK_THAT(fine.beta, WithinRel(coarse.beta, 1e-6));
}

TEST_CASE("a tight prior dominates the posterior", "[bayes]") {
    const DataSet d = simulate(0.75, 0.75, 30, 13);
    const GammaPrior g = elicit_hyperparams(0.6, 0.9, 1e-5);
    const PosteriorMeans m = posterior_mean_oracle(d, g);
    CHECK_THAT(m.alpha, WithinAbs(0.6, 1e-2));
    CHECK_THAT(m.beta, WithinAbs(0.9, 1e-2));
}

TEST_CASE("Lindley estimate tracks the posterior mean", "[bayes]") {
    const GammaPrior g = elicit_hyperparams(0.75, 0.75, 0.5);
    for (std::uint64_t seed = 40; seed < 45; ++seed) {
        const DataSet d = simulate(0.75, 0.75, 30, seed);
        const BayesResult r = fit_bayes_lindley(d, g);
        CHECK(r.oracle_abs_gap.first <= 0.02);
        CHECK(r.oracle_abs_gap.second <= 0.02);
        CHECK(r.oracle_abs_gap.first == std::abs(r.alpha_lindley - r.alpha_oracle));
    }
}

TEST_CASE("a tight prior pulls the Lindley estimate toward the prior mean", "[bayes]") {
    const DataSet d = simulate(0.75, 0.75, 40, 21);
    const FitResult mle = fit_mle(d);
    const GammaPrior g = elicit_hyperparams(0.75, 0.75, 0.05);
    const LindleyEstimate l = lindley_estimate(d, g);
    CHECK(std::abs(l.alpha - 0.75) < std::abs(mle.alpha_hat - 0.75));
    CHECK(std::abs(l.beta - 0.75) < std::abs(mle.beta_hat - 0.75));
}

TEST_CASE("Lindley correction under a flat prior is of order 1/n", "[bayes]") {
    const GammaPrior flat(1.0, 1e-12, 1.0, 1e-12);
    auto gap = [&](std::size_t n) {
        const DataSet d = simulate(0.75, 0.75, n, 555);
        const LindleyEstimate l = lindley_estimate(d, flat);
        return std::max(std::abs(l.alpha - l.mle.alpha_hat), std::abs(l.beta - l.mle.beta_hat));
    };
    const double g100 = gap(100);
    const double g1600 = gap(1600);
    CHECK(g100 < 0.05);
    CHECK(g1600 < g100 / 4.0);

    // The offset is real: the exact posterior mean sits as far from the MLE.
    const DataSet d = simulate(0.75, 0.75, 100, 555);
    const LindleyEstimate l = lindley_estimate(d, flat);
    const PosteriorMeans m = posterior_mean_oracle(d, flat);
    CHECK(std::abs(m.alpha - l.mle.alpha_hat) > 1e-3 * (1.0 + l.mle.alpha_hat));
    CHECK_THAT(l.alpha, WithinAbs(m.alpha, 2e-3));
    CHECK_THAT(l.beta, WithinAbs(m.beta, 2e-3));
}

TEST_CASE("Lindley requires a converged fit", "[bayes]") {
    const GammaPrior g = elicit_hyperparams(0.75, 0.75, 0.5);
    CHECK_THROWS_AS(lindley_estimate(DataSet({2.0, 2.0, 2.0}), g), ConvergenceError);
}
