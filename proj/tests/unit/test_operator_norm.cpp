#include <doctest.h>

#include "hardylab/constants.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/operator_norm.hpp"

#include <cmath>

using namespace hardylab;

namespace {

// Independent oracle: the Hardy operator restricted to a log-window of width
// T maps, under x = e^y and the L2 isometry, to the causal convolution with
// kernel e^{-c tau}, c = (1-alpha)/2. Its norm is 1/sqrt(c^2 + w^2) where w
// solves tan(wT) = -w/c; it approaches the infinite-domain value 1/c as the
// window widens. Fixed-point iteration w <- (pi - atan(w/c)) / T converges.
double windowed_norm(double alpha, double r_min, double r_max) {
    const double c = (1.0 - alpha) / 2.0;
    const double T = std::log(r_max / r_min);
    double w = M_PI / (T + 1.0 / c);
    for (int i = 0; i < 300; ++i) w = (M_PI - std::atan(w / c)) / T;
    return 1.0 / std::sqrt(c * c + w * w);
}

} // namespace

TEST_CASE("discrete operator norm matches the window-limited analytic value") {
    auto grid = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 12);
    for (double alpha : {-1.0, 0.0, 0.5}) {
        const double got = operator_norm_oracle(alpha, *grid);
        const double ref = windowed_norm(alpha, 1e-6, 1e6);
        INFO("alpha = ", alpha, ": discrete ", got, " analytic ", ref);
        CHECK(got == doctest::Approx(ref).epsilon(3e-3));
    }
}

TEST_CASE("window-limited norm approaches 2/(1-alpha) on widening windows") {
    SUBCASE("alpha = 0 on [1e-12, 1e12]") {
        auto grid = RadialGrid::make(1e-12, 1e12, std::size_t{1} << 13);
        const double got = operator_norm_oracle(0.0, *grid);
        CHECK(std::abs(got - 2.0) / 2.0 < 0.01);
        CHECK(got == doctest::Approx(windowed_norm(0.0, 1e-12, 1e12)).epsilon(3e-3));
    }
    SUBCASE("alpha = -1 already within 1% on the default window") {
        auto grid = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 12);
        const double got = operator_norm_oracle(-1.0, *grid);
        CHECK(std::abs(got - sharp_constant_1d(2, 2, -1.0)) /
                  sharp_constant_1d(2, 2, -1.0) <
              0.01);
    }
    SUBCASE("alpha = 0.5 needs a very wide window for 1%") {
        auto grid = RadialGrid::make(1e-20, 1e20, std::size_t{1} << 13);
        const double got = operator_norm_oracle(0.5, *grid);
        CHECK(std::abs(got - 4.0) / 4.0 < 0.01);
    }
}

TEST_CASE("coarse grids stay near the window value") {
    // The trapezoid discretization converges from above here: the coarse value
    // overshoots the window norm slightly rather than undershooting it.
    auto coarse = RadialGrid::make(1e-6, 1e6, 64);
    auto fine = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 12);
    const double vc = operator_norm_oracle(0.0, *coarse);
    const double vf = operator_norm_oracle(0.0, *fine);
    CHECK(std::abs(vc - vf) / vf < 5e-3);
    CHECK(vc < 2.0); // still bounded by the infinite-domain constant
}

TEST_CASE("operator norm oracle error paths and determinism") {
    auto grid = RadialGrid::make(1e-6, 1e6, 512);
    CHECK_THROWS_AS(operator_norm_oracle(1.5, *grid), InadmissibleParamsError);

    OperatorNormOptions tight;
    tight.max_iters = 2;
    CHECK_THROWS_AS(operator_norm_oracle(0.0, *grid, tight), ConvergenceError);

    OperatorNormOptions a, b;
    a.seed = b.seed = 99;
    CHECK(operator_norm_oracle(0.0, *grid, a) == operator_norm_oracle(0.0, *grid, b));
}
