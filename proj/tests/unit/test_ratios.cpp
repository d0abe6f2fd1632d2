#include <doctest.h>

#include "hardylab/constants.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/families.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/ratios.hpp"
#include "hardylab/rng.hpp"

#include <cmath>
#include <numbers>

using namespace hardylab;

namespace {
constexpr double kPi = std::numbers::pi;

SphereMeasure sphere_of(double v) {
    SphereMeasure s;
    s.value = v;
    s.method = SphereMethod::analytic;
    return s;
}

RadialFunction indicator12(GridPtr g) {
    return RadialFunction::sample(std::move(g), [](double t) {
        return (t >= 1.0 && t <= 2.0) ? 1.0 : 0.0;
    });
}
} // namespace

TEST_CASE("hardy_ratio_1d closed-form cases") {
    auto grid = RadialGrid::standard();

    SUBCASE("indicator of [1,2], classical weights") {
        // lhs^2 = int_1^2 (x-1)^2 x^-2 dx + int_2^inf x^-2 dx = 2 - 2 ln 2, rhs = 1
        const RatioResult r = hardy_ratio_1d(indicator12(grid), 2, 2, 0, -2);
        CHECK(r.ratio == doctest::Approx(0.78339366788359310887).epsilon(1e-3));
        CHECK(r.ratio < r.constant);
        CHECK(r.constant == doctest::Approx(2.0).epsilon(1e-15));
        CHECK(r.margin > 0.0);
    }
    SUBCASE("constant on (0,1]") {
        // lhs^2 = int_0^1 dx + int_1^inf x^-2 dx = 2, rhs = 1
        auto u = RadialFunction::sample(grid, [](double t) { return t <= 1.0 ? 1.0 : 0.0; });
        const RatioResult r = hardy_ratio_1d(u, 2, 2, 0, -2);
        CHECK(r.ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));
    }
    SUBCASE("zero function has ratio zero") {
        const RatioResult r = hardy_ratio_1d(RadialFunction::zeros(grid), 2, 2, 0, -2);
        CHECK(r.ratio == 0.0);
        CHECK(r.lhs == 0.0);
    }
    SUBCASE("near-extremal truncated power") {
        // closed-form piecewise value 1.84910955 (independent quadrature oracle)
        auto u = RadialFunction::sample(
            grid, [](double t) { return t <= 1.0 ? std::pow(t, -0.51) : 0.0; });
        const RatioResult r = hardy_ratio_1d(u, 2, 2, 0, -2);
        CHECK(r.ratio == doctest::Approx(1.84910955268499).epsilon(2e-4));
        CHECK(r.ratio > 1.8);
        CHECK(r.ratio < 2.0);
        // stable under grid refinement
        auto g2 = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 13);
        auto u2 = RadialFunction::sample(
            g2, [](double t) { return t <= 1.0 ? std::pow(t, -0.51) : 0.0; });
        const RatioResult r2 = hardy_ratio_1d(u2, 2, 2, 0, -2);
        CHECK(r.ratio == doctest::Approx(r2.ratio).epsilon(1e-3));
    }
    SUBCASE("signed input is flagged") {
        auto u = RadialFunction::sample(
            grid, [](double t) { return (t >= 1.0 && t <= 2.0) ? -1.0 : 0.0; });
        const RatioResult r = hardy_ratio_1d(u, 2, 2, 0, -2);
        CHECK(!r.warnings.empty());
    }
    SUBCASE("inadmissible parameters rejected") {
        CHECK_THROWS_AS(hardy_ratio_1d(indicator12(grid), 2, 2, 1.5, -2),
                        InadmissibleParamsError);
        CHECK_THROWS_AS(hardy_ratio_1d(indicator12(grid), 2, 2, 0, -1.9),
                        InadmissibleParamsError);
    }
}

TEST_CASE("conjugate_ratio_1d closed-form cases") {
    auto grid = RadialGrid::standard();

    SUBCASE("indicator of [1,2], alpha0 = 2") {
        // lhs^2 = int_0^1 1 dx + int_1^2 (2-x)^2 dx = 4/3, rhs^2 = int_1^2 x^2 = 7/3
        const RatioResult r = conjugate_ratio_1d(indicator12(grid), 2, 2, 2, 0);
        CHECK(r.ratio == doctest::Approx(0.75592894601845445443).epsilon(1e-3));
        CHECK(r.constant == doctest::Approx(2.0).epsilon(1e-15));
    }
    SUBCASE("zero function") {
        const RatioResult r = conjugate_ratio_1d(RadialFunction::zeros(grid), 2, 2, 2, 0);
        CHECK(r.ratio == 0.0);
    }
    SUBCASE("mirrored near-extremal family") {
        auto u = RadialFunction::sample(
            grid, [](double t) { return t >= 1.0 ? std::pow(t, -1.49) : 0.0; });
        const RatioResult r = conjugate_ratio_1d(u, 2, 2, 2, 0);
        CHECK(r.ratio == doctest::Approx(1.84910955268499).epsilon(2e-4));
        CHECK(r.ratio > 1.8);
    }
    SUBCASE("inadmissible alpha0 rejected") {
        CHECK_THROWS_AS(conjugate_ratio_1d(indicator12(grid), 2, 2, 0.5, 0),
                        InadmissibleParamsError);
    }
}

TEST_CASE("dilation leaves the ratio invariant") {
    // The scaling relation makes the continuum ratio exactly scale-free; with
    // a node-aligned shift the discrete sums rescale exactly too, up to the
    // lhs tail beyond the grid, which the steep weight beta = -4 makes
    // negligible here.
    auto grid = RadialGrid::standard();
    const double h = grid->log_step();
    const int k = static_cast<int>(std::round(2.0 / h)); // shift by a whole number of cells
    const double lam = std::exp(k * h);
    auto u1 = RadialFunction::sample(grid, [](double t) {
        return (t >= 1e-3 && t <= 1e2) ? std::pow(t, -0.3) : 0.0;
    });
    auto u2 = RadialFunction::sample(grid, [lam](double t) {
        const double s = t / lam;
        return (s >= 1e-3 && s <= 1e2) ? std::pow(s, -0.3) : 0.0;
    });
    const double beta = beta_from_alpha(2, 2, -2.0, 1); // = -4
    const double r1 = hardy_ratio_1d(u1, 2, 2, -2.0, beta).ratio;
    const double r2 = hardy_ratio_1d(u2, 2, 2, -2.0, beta).ratio;
    CHECK(r1 == doctest::Approx(r2).epsilon(1e-8));
}

TEST_CASE("group_ratio_radial") {
    auto grid = RadialGrid::standard();

    SUBCASE("indicator ball on the euclidean plane") {
        // piecewise closed form: ratio = 2 pi sqrt(1/2)
        auto g = RadialFunction::sample(grid, [](double t) { return t <= 1.0 ? 1.0 : 0.0; });
        const HardyParams params = HardyParams::make_balanced(2, 2, 0, 2.0);
        const RatioResult r = group_ratio_radial(g, params, 2.0, sphere_of(2 * kPi));
        CHECK(r.ratio == doctest::Approx(4.442882938158366247).epsilon(1e-3));
        CHECK(r.ratio < r.constant);
        CHECK(r.constant == doctest::Approx(2 * kPi).epsilon(1e-14));
    }
    SUBCASE("zero function") {
        const HardyParams params = HardyParams::make_balanced(2, 2, 0, 2.0);
        const RatioResult r =
            group_ratio_radial(RadialFunction::zeros(grid), params, 2.0, sphere_of(2 * kPi));
        CHECK(r.ratio == 0.0);
    }
    SUBCASE("inadmissible parameters rejected") {
        CHECK_THROWS_AS(group_ratio_radial(RadialFunction::zeros(grid),
                                           HardyParams::make(2, 2, 0, -3.9), 2.0,
                                           sphere_of(2 * kPi)),
                        InadmissibleParamsError);
    }
}

TEST_CASE("radial reduction identity") {
    // group ratio == |S|^{1+1/q-1/p} * 1D ratio of h(t) = g(t) t^{Q-1} at the
    // mapped exponents, to 1e-10 (same grid, algebraic identity)
    auto grid = RadialGrid::standard();
    struct Tuple { double p, q, Q, S; };
    const Tuple tuples[] = {
        {2.0, 2.0, 2.0, 2 * kPi},
        {2.0, 4.0, 4.0, 19.739},
        {1.5, 2.5, 3.0, 7.1},
        {3.0, 3.0, 4.0, 32.0},
    };
    CounterRng rng(41);
    for (const auto& t : tuples) {
        for (int j = 0; j < 5; ++j) {
            const double alpha = t.Q * (t.p - 1.0) - std::exp(rng.uniform(100 * j, -1.0, 1.5));
            const HardyParams params = HardyParams::make_balanced(t.p, t.q, alpha, t.Q);
            const double c = std::exp(rng.uniform(100 * j + 1, -1.0, 1.0));
            auto g = RadialFunction::sample(grid, [c](double r) {
                const double l = std::log(r);
                return c * std::exp(-0.5 * l * l); // smooth log-bump
            });
            const RatioResult rg = group_ratio_radial(g, params, t.Q, sphere_of(t.S));

            RadialFunction h;
            h.grid = grid;
            h.values.resize(g.values.size());
            for (std::size_t i = 0; i < g.values.size(); ++i)
                h.values[i] = g.values[i] * std::pow(grid->nodes()[i], t.Q - 1.0);
            const ReductionExponents e = reduction_exponents(params, t.Q);
            const RatioResult r1 = hardy_ratio_1d(h, t.p, t.q, e.alpha_tilde, e.beta_tilde);
            const double mapped = std::pow(t.S, 1.0 + 1.0 / t.q - 1.0 / t.p) * r1.ratio;
            CHECK(rg.ratio == doctest::Approx(mapped).epsilon(1e-10));
        }
    }
}

TEST_CASE("inequality never violated on random test functions") {
    auto grid = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 12);
    CounterRng rng(53);
    int checked = 0;
    for (int t = 0; t < 6; ++t) {
        const double p = rng.uniform(10 * t, 1.15, 3.5);
        const double q = (t % 2 == 0) ? p : p + rng.uniform(10 * t + 1, 0.05, 2.0);
        const double Q = (t % 3 == 0) ? 1.0 : (t % 3 == 1 ? 2.0 : 4.0);
        const double alpha = Q * (p - 1.0) - std::exp(rng.uniform(10 * t + 2, -1.5, 1.5));
        const HardyParams params = HardyParams::make_balanced(p, q, alpha, Q);
        const double C1d = sharp_constant_1d(p, q, reduction_exponents(params, Q).alpha_tilde);
        (void)C1d;
        for (int f = 0; f < 30; ++f) {
            const auto pw = random_piecewise_power(derive_seed(1234, 100 * t + f));
            const RadialFunction u = sample_piecewise_power(pw, grid);
            const RatioResult rg = group_ratio_radial(u, params, Q, sphere_of(3.7));
            CHECK(rg.ratio <= rg.constant * (1.0 + 1e-3));
            ++checked;
        }
    }
    CHECK(checked == 180);
}

TEST_CASE("group_ratio_montecarlo") {
    const GroupSpec g = GroupSpec::isotropic(2);
    const QuasiNormSpec nm{QuasiNormKind::euclidean_isotropic, 1.0};
    const SphereMeasure S = sphere_measure(g, nm, 100000, 2);
    const HardyParams params = HardyParams::make_balanced(2, 2, 0, 2.0);

    SUBCASE("zero function") {
        RadialProfile zero{[](double) { return 0.0; }, 0.0, 1.0, "zero"};
        const auto ev = radial_evaluator(zero, g, nm);
        const RatioResult r = group_ratio_montecarlo(ev, params, g, nm, S, 2000, 3);
        CHECK(r.ratio == 0.0);
    }
    SUBCASE("radial function agrees with the radial path") {
        RadialProfile prof{[](double r) { return r <= 1.0 ? 1.0 - r * r : 0.0; },
                           0.0, 1.0, "bump"};
        const auto ev = radial_evaluator(prof, g, nm);
        const RatioResult mc = group_ratio_montecarlo(ev, params, g, nm, S, 4000, 5);
        auto grid = RadialGrid::standard();
        const RatioResult rad =
            group_ratio_radial(RadialFunction::sample(grid, prof.value), params, 2.0, S);
        INFO("mc ", mc.ratio, " +- ", mc.ratio_stderr, " radial ", rad.ratio);
        CHECK(std::abs(mc.ratio - rad.ratio) <= 3.0 * mc.ratio_stderr);
        CHECK(mc.ratio <= mc.constant * (1.0 + 3.0 * mc.ratio_stderr / mc.ratio));
        CHECK(mc.details.at("inner_acceptance_rate") > 1e-3);
    }
    SUBCASE("non-radial function stays below the constant") {
        auto nrm = make_norm_evaluator(g, nm);
        BoxedEvaluator ev;
        ev.box_lo = {-1.0, -1.0};
        ev.box_hi = {1.0, 1.0};
        ev.norm_lo = 0.0;
        ev.norm_hi = 1.0;
        ev.name = "tilted-indicator";
        ev.value = [nrm](std::span<const double> x) {
            const double r = nrm(x);
            if (r >= 1.0 || r == 0.0) return r < 1.0 ? 1.0 : 0.0;
            const double re = std::sqrt(x[0] * x[0] + x[1] * x[1]);
            return 1.0 + x[0] / (2.0 * re);
        };
        const RatioResult mc = group_ratio_montecarlo(ev, params, g, nm, S, 4000, 11);
        CHECK(mc.ratio > 0.0);
        CHECK(mc.ratio <= mc.constant * (1.0 + 3.0 * mc.ratio_stderr / mc.ratio));
    }
}

TEST_CASE("holder sphere check") {
    const GroupSpec g = GroupSpec::isotropic(2);
    const QuasiNormSpec nm{QuasiNormKind::euclidean_isotropic, 1.0};
    const SphereMeasure S = sphere_measure(g, nm, 100000, 2);

    SUBCASE("radial input gives equality") {
        auto u = [](std::span<const double>) { return 3.0; };
        const auto rep = holder_sphere_check(u, 1.0, 2.0, g, nm, S, 200000, 13, true);
        CHECK(rep.passed);
    }
    SUBCASE("p = 1 is an exact identity") {
        auto u = [](std::span<const double> x) { return 1.0 + (x[0] > 0 ? 1.0 : 0.0); };
        const auto rep = holder_sphere_check(u, 1.0, 1.0, g, nm, S, 50000, 17);
        CHECK(rep.passed);
        CHECK(rep.details.at("margin") == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("sign function gives a strict gap") {
        auto u = [](std::span<const double> x) {
            return 1.0 + (x[0] > 0.0 ? 1.0 : (x[0] < 0.0 ? -1.0 : 0.0));
        };
        const auto rep = holder_sphere_check(u, 1.0, 2.0, g, nm, S, 200000, 19);
        CHECK(rep.passed);
        CHECK(rep.details.at("margin_over_stderr") > 3.0);
    }
    SUBCASE("empty annulus is a sampling error") {
        auto u = [](std::span<const double>) { return 1.0; };
        CHECK_THROWS_AS(holder_sphere_check(u, 1.0, 2.0, g, nm, S, 0, 3), SamplingError);
    }
    SUBCASE("koranyi annulus works") {
        const GroupSpec h1 = GroupSpec::heisenberg1();
        const QuasiNormSpec kor{QuasiNormKind::koranyi_h1, 1.0};
        const SphereMeasure Sk = sphere_measure(h1, kor, 200000, 23);
        auto u = [](std::span<const double>) { return 2.0; };
        const auto rep = holder_sphere_check(u, 1.0, 2.0, h1, kor, Sk, 200000, 29, true);
        CHECK(rep.passed);
    }
}
