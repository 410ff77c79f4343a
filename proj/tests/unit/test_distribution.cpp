#include "pmad/distribution.hpp"
#include "pmad/errors.hpp"

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

using namespace pmad;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("parameters are validated", "[distribution]") {
    CHECK_THROWS_AS(Params(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(Params(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(Params(std::numeric_limits<double>::quiet_NaN(), 1.0), DomainError);
    CHECK_THROWS_AS(Params(1.0, std::numeric_limits<double>::infinity()), DomainError);
    CHECK(Params(1.0, 2.0) == Params(1.0, 2.0));
}

TEST_CASE("density, cdf and derived functions at (1, 1)", "[distribution]") {
    const Params p(1.0, 1.0);
    CHECK_THAT(pdf(p, 1.0), WithinRel(4.0 / (std::sqrt(std::numbers::pi) * std::numbers::e), 1e-14));
    CHECK_THAT(pdf(p, 1.0), WithinRel(0.830214994841189, 1e-13));
    CHECK_THAT(cdf(p, 1.0), WithinRel(0.427593295529120, 1e-13));
    CHECK_THAT(hazard(p, 1.0), WithinRel(1.45039355471670, 1e-13));
    CHECK_THAT(reverse_hazard(p, 1.0), WithinRel(1.94159965444231, 1e-13));
    CHECK_THAT(odds(p, 1.0), WithinRel(0.747009586347138, 1e-13));
    CHECK_THAT(hazard(p, 2.0), WithinRel(3.59334391881568, 1e-12));
    CHECK_THAT(quantile(p, 0.5), WithinRel(1.08765203175817, 1e-13));
}

TEST_CASE("density against an independent formula", "[distribution]") {
    for (auto [a, b] : {std::pair{0.5, 0.5}, {2.0, 0.75}, {0.3, 3.0}, {5.0, 1.5}}) {
        const Params p(a, b);
        for (double x : {0.05, 0.4, 1.0, 1.7, 3.2}) {
            CHECK_THAT(pdf(p, x), WithinRel(static_cast<double>(oracle::pmad_pdf(a, b, x)), 1e-12));
            CHECK_THAT(cdf(p, x) + survival(p, x), WithinAbs(1.0, 1e-15));
        }
    }
}

TEST_CASE("behaviour at the boundaries", "[distribution]") {
    CHECK(pdf(Params(1, 1), 0.0) == 0.0);
    CHECK_THROWS_AS(pdf(Params(1, 1), -1.0), DomainError);
    CHECK_THROWS_AS(cdf(Params(1, 1), -1.0), DomainError);
    CHECK_THROWS_AS(survival(Params(1, 1), -1.0), DomainError);
    CHECK(survival(Params(1, 1), 0.0) == 1.0);
    CHECK_THAT(pdf(Params(1, 1.0 / 3.0), 0.0), WithinRel(4.0 / (3.0 * std::sqrt(std::numbers::pi)), 1e-14));
    CHECK_THROWS_AS(pdf(Params(1, 0.2), 0.0), DomainError);
    CHECK(std::isinf(log_pdf(Params(1, 1), 0.0)));
    CHECK_THROWS_AS(hazard(Params(1, 1), 1e3), OverflowError);
    CHECK_THROWS_AS(reverse_hazard(Params(1, 1), 0.0), DomainError);
    CHECK_THROWS_AS(quantile(Params(1, 1), 1.0), DomainError);
    CHECK_THROWS_AS(quantile(Params(1, 1), -0.1), DomainError);
    CHECK(quantile(Params(1, 1), 0.0) == 0.0);
}

TEST_CASE("beta = 1 is the Maxwell distribution", "[distribution]") {
    for (double a : {0.2, 1.0, 3.0}) {
        for (double z : {0.1, 0.9, 2.5}) {
            CHECK_THAT(pdf(Params(a, 1.0), z), WithinRel(maxwell_pdf(a, z), 1e-14));
            CHECK_THAT(cdf(Params(a, 1.0), z), WithinRel(maxwell_cdf(a, z), 1e-14));
        }
    }
}

TEST_CASE("power closure: X^beta is Maxwell(alpha)", "[distribution]") {
    const Params p(1.3, 0.6);
    for (double x : {0.2, 1.0, 2.0, 5.0}) {
        CHECK_THAT(cdf(p, x), WithinRel(maxwell_cdf(1.3, std::pow(x, 0.6)), 1e-13));
    }
}

TEST_CASE("quantile round-trip", "[distribution]") {
    for (auto [a, b] : {std::pair{1.0, 1.0}, {0.5, 1.5}, {2.0, 0.75}, {0.1, 0.2}, {4.0, 5.0}}) {
        const Params p(a, b);
        for (double u : {1e-9, 1e-4, 0.1, 0.5, 0.9, 0.9999}) {
            CHECK_THAT(cdf(p, quantile(p, u)), WithinAbs(u, 1e-12));
        }
    }
}

TEST_CASE("sampler is reproducible and follows the model", "[distribution]") {
    Sampler s1(Params(1, 1), 42);
    Sampler s2(Params(1, 1), 42);
    const auto a = s1.sample(1000);
    const auto b = s2.sample(1000);
    CHECK(a == b);
    CHECK(std::all_of(a.begin(), a.end(), [](double x) { return x > 0.0; }));
    CHECK_THROWS_AS(s1.sample(0), DomainError);

    Sampler s3(Params(2.0, 0.75), 7);
    auto xs = s3.sample(20000);
    std::sort(xs.begin(), xs.end());
    const Params p(2.0, 0.75);
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = cdf(p, xs[i]);
        d = std::max({d, (i + 1.0) / xs.size() - f, f - double(i) / xs.size()});
    }
    CHECK(d < 1.63 / std::sqrt(double(xs.size())));
}

TEST_CASE("seed mixing separates substreams", "[distribution]") {
    CHECK(mix_seed(1, 0) != mix_seed(1, 1));
    CHECK(mix_seed(1, 0) != mix_seed(2, 0));
    CHECK(mix_seed(99, 5) == mix_seed(99, 5));
}
