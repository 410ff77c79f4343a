#include "pmad/entropy.hpp"
#include "pmad/errors.hpp"
#include "pmad/moments.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>

using namespace pmad;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Renyi entropy at (1, 1)", "[entropy]") {
    const Params p(1, 1);
    CHECK_THAT(renyi_entropy(p, 2.0), WithinRel(0.513473425096508, 1e-10));
    CHECK_THAT(closed_form::renyi_entropy(p, 2.0), WithinRel(0.513473425096508, 1e-12));
    CHECK_THAT(std::exp(log_power_integral(p, 2.0)), WithinRel(0.598413420602149, 1e-10));
    CHECK_THAT(delta_entropy(p, 2.0), WithinRel(1.0 - 0.598413420602149, 1e-10));
}

TEST_CASE("power integral against independent quadrature", "[entropy]") {
    for (auto [a, b] : {std::pair{0.5, 0.5}, {2.0, 1.5}, {1.0, 3.0}}) {
        for (double delta : {0.5, 2.0, 3.0}) {
            const double ref = std::log(static_cast<double>(oracle::simpson_log(
                [&](long double x) { return std::pow(oracle::pmad_pdf(a, b, x), delta); }, -40.0L, 8.0L)));
            CHECK_THAT(log_power_integral(Params(a, b), delta), WithinAbs(ref, 1e-9));
            CHECK_THAT(closed_form::log_power_integral(Params(a, b), delta), WithinAbs(ref, 1e-9));
        }
    }
}

TEST_CASE("Shannon entropy is the order-one limit", "[entropy]") {
    const Params p(1, 1);
    CHECK_THAT(shannon_entropy(p), WithinRel(0.649580607826233, 1e-10));
    CHECK_THAT(closed_form::renyi_entropy(p, 1.0 + 1e-6), WithinAbs(shannon_entropy(p), 1e-5));
    CHECK_THAT(closed_form::delta_entropy(p, 1.0 - 1e-6), WithinAbs(shannon_entropy(p), 1e-5));
}

TEST_CASE("generalized entropy", "[entropy]") {
    const Params p(1, 1);
    const double mu = raw_moment(p, 1);
    const double v2 = raw_moment(p, 2);
    CHECK_THAT(generalized_entropy(p, 2.0), WithinRel((v2 / (mu * mu) - 1.0) / 2.0, 1e-13));
    CHECK_THROWS_AS(generalized_entropy(p, 1.0), DomainError);
    CHECK_THROWS_AS(generalized_entropy(Params(1, 0.2), -0.7), DomainError);
}

TEST_CASE("entropy orders are validated and dispatched", "[entropy]") {
    CHECK_THROWS_AS(EntropyOrder(EntropyKind::renyi, 1.0), DomainError);
    CHECK_THROWS_AS(EntropyOrder(EntropyKind::delta, -2.0), DomainError);
    CHECK_THROWS_AS(EntropyOrder(EntropyKind::generalized, 0.0), DomainError);
    const Params p(2, 0.75);
    CHECK(entropy(p, EntropyOrder(EntropyKind::renyi, 2.0)) == renyi_entropy(p, 2.0));
    CHECK(entropy(p, EntropyOrder(EntropyKind::delta, 0.5)) == delta_entropy(p, 0.5));
    CHECK(entropy(p, EntropyOrder(EntropyKind::generalized, 3.0)) == generalized_entropy(p, 3.0));
}

TEST_CASE("divergent power integrals are reported", "[entropy]") {
    // order (3 beta - 1) <= -1: beta = 0.1, delta = 3 gives -2.1
    CHECK_THROWS_AS(renyi_entropy(Params(1, 0.1), 3.0), DivergenceError);
    CHECK_THROWS_AS(closed_form::renyi_entropy(Params(1, 0.1), 3.0), DivergenceError);
}
