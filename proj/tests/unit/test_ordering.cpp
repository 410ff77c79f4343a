#include "pmad/errors.hpp"
#include "pmad/ordering.hpp"

#include <catch_amalgamated.hpp>

#include <vector>

using namespace pmad;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
    return g;
}

}  // namespace

TEST_CASE("larger alpha is smaller in likelihood ratio order", "[ordering]") {
    const auto g = grid(0.01, 6.0, 200);
    for (double b : {0.5, 1.0, 2.0}) {
        const auto r = check_stochastic_order(Params(2.0, b), Params(0.7, b), g);
        CHECK(r.lr_decreasing);
        CHECK_FALSE(r.lr_increasing);
        CHECK(r.cdf_dominates);
        CHECK(r.hazard_dominates);

        const auto rev = check_stochastic_order(Params(0.7, b), Params(2.0, b), g);
        CHECK_FALSE(rev.cdf_dominates);
        CHECK(rev.lr_increasing);
    }
}

TEST_CASE("identical members are ordered both ways", "[ordering]") {
    const auto r = check_stochastic_order(Params(1, 1), Params(1, 1), grid(0.1, 3.0, 50));
    CHECK(r.lr_decreasing);
    CHECK(r.lr_increasing);
    CHECK(r.cdf_dominates);
}

TEST_CASE("grid is validated", "[ordering]") {
    const std::vector<double> bad{1.0, 0.5};
    CHECK_THROWS_AS(check_stochastic_order(Params(1, 1), Params(2, 1), bad), DomainError);
    const std::vector<double> single{1.0};
    CHECK_THROWS_AS(check_stochastic_order(Params(1, 1), Params(2, 1), single), DomainError);
}
