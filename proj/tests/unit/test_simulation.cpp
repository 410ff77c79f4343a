#include "pmad/errors.hpp"
#include "pmad/simulation.hpp"

#include <catch_amalgamated.hpp>

#include <cstring>

using namespace pmad;

namespace {

bool same_bits(const EstimatorStats& a, const EstimatorStats& b) {
    return std::memcmp(&a.avg, &b.avg, sizeof(double)) == 0 &&
           std::memcmp(&a.mse, &b.mse, sizeof(double)) == 0 && a.count == b.count;
}

}  // namespace

TEST_CASE("configuration is validated", "[simulation]") {
    SimConfig c;
    c.replications = 99;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c.replications = 100;
    c.n = 2;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c.n = 10;
    CHECK_NOTHROW(c.validate());
    c.prior_variance = 0.0;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("study is reproducible for any worker count", "[simulation]") {
    SimConfig c;
    c.n = 20;
    c.replications = 200;
    c.seed = 99;
    c.workers = 1;
    const SimReport one = run_study(c);
    c.workers = 4;
    const SimReport four = run_study(c);
    CHECK(same_bits(one.alpha_ml, four.alpha_ml));
    CHECK(same_bits(one.beta_ml, four.beta_ml));
    CHECK(same_bits(one.alpha_bl, four.alpha_bl));
    CHECK(same_bits(one.h_ml, four.h_ml));
    CHECK(one.ci_alpha.acl == four.ci_alpha.acl);
    CHECK(one.convergence_failures == four.convergence_failures);

    c.seed = 100;
    const SimReport other = run_study(c);
    CHECK_FALSE(same_bits(one.alpha_ml, other.alpha_ml));
}

TEST_CASE("study summaries are well formed", "[simulation]") {
    SimConfig c;
    c.n = 30;
    c.replications = 300;
    const SimReport r = run_study(c);
    CHECK(r.alpha_ml.count + r.convergence_failures == c.replications);
    CHECK(r.alpha_ml.mse >= 0.0);
    CHECK(r.beta_ml.mse >= 0.0);
    CHECK(r.ci_alpha.acl > 0.0);
    CHECK(r.ci_beta.acl > 0.0);
    CHECK(r.ci_alpha.avg_lower < r.ci_alpha.avg_upper);
    CHECK(r.alpha_bl.count + r.bayes_failures == r.alpha_ml.count);
    CHECK(r.r_ml.truth == survival(Params(0.75, 0.75), 1.0));
}

TEST_CASE("precision improves with sample size", "[simulation]") {
    SimConfig c;
    c.replications = 1000;
    c.n = 10;
    const SimReport small = run_study(c);
    c.n = 50;
    const SimReport large = run_study(c);
    CHECK(large.alpha_ml.mse < small.alpha_ml.mse);
    CHECK(large.beta_ml.mse < small.beta_ml.mse);
    CHECK(std::abs(large.alpha_ml.avg - 0.75) < std::abs(small.alpha_ml.avg - 0.75));
    CHECK(std::abs(large.beta_ml.avg - 0.75) < std::abs(small.beta_ml.avg - 0.75));
    CHECK(large.ci_alpha.acl < small.ci_alpha.acl);
    CHECK(large.ci_beta.acl < small.ci_beta.acl);
}

TEST_CASE("informative prior makes Bayes estimates more precise", "[simulation]") {
    SimConfig c;
    c.replications = 1000;
    for (std::size_t n : {10u, 20u, 30u, 50u}) {
        c.n = n;
        const SimReport r = run_study(c);
        CHECK(r.alpha_bl.mse <= r.alpha_ml.mse);
        CHECK(r.beta_bl.mse <= r.beta_ml.mse);
    }
}
