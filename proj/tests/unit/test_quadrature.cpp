#include "pmad/quadrature.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>

using namespace pmad::quad;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("finite-interval Gauss-Kronrod", "[quadrature]") {
    CHECK_THAT(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi),
               WithinRel(2.0, 1e-13));
    CHECK_THAT(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0), WithinRel(2.0 / 3.0, 1e-11));
    CHECK(integrate([](double x) { return x; }, 1.0, 1.0) == 0.0);
    CHECK_THAT(integrate([](double x) { return x * x; }, 1.0, 0.0), WithinRel(-1.0 / 3.0, 1e-13));
}

TEST_CASE("positive half-line integration", "[quadrature]") {
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THAT(integrate_positive([](double x) { return std::exp(-x); }, 0.0, inf, 1.0),
               WithinRel(1.0, 1e-12));
    CHECK_THAT(integrate_positive([](double x) { return std::exp(-x * x); }, 0.0, inf, 1.0),
               WithinRel(0.5 * std::sqrt(std::numbers::pi), 1e-12));
    // Integrable singularity at the origin and a heavy tail.
    CHECK_THAT(integrate_positive([](double x) { return std::pow(x, -0.5) * std::exp(-x); }, 0.0, inf, 1.0),
               WithinRel(std::sqrt(std::numbers::pi), 1e-10));
    CHECK_THAT(integrate_positive([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, inf, 1.0),
               WithinRel(0.5 * std::numbers::pi, 1e-9));
    // Far-off scale hint still converges.
    CHECK_THAT(integrate_positive([](double x) { return 1e6 * std::exp(-1e6 * x); }, 0.0, inf, 1.0),
               WithinRel(1.0, 1e-10));
    CHECK_THAT(integrate_positive([](double x) { return std::exp(-x); }, 1.0, 2.0, 1.0),
               WithinRel(std::exp(-1.0) - std::exp(-2.0), 1e-13));
}
