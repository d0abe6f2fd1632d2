// Acceptance suite: every quantitative reproduction and property gate of the
// lab, one PASS/FAIL line per criterion. Exit code = number of failed
// criteria.
//
// Criteria 1, 2 and the pinned reference of criterion 5 measure the
// discretized operator / printed-formula values against targets that the
// default log-window and the corrected sharp constant provably cannot meet;
// they are asserted as stated and report the computed values alongside the
// window-limited analytic references (see README, "Known red gates").

#include "hardylab/constants.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/families.hpp"
#include "hardylab/grid.hpp"
#include "hardylab/group.hpp"
#include "hardylab/montecarlo.hpp"
#include "hardylab/operator_norm.hpp"
#include "hardylab/params.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/ratios.hpp"
#include "hardylab/rng.hpp"
#include "hardylab/search.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace hardylab;

namespace {

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

void record(int num, const std::string& name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", num, name.c_str());
    if (!detail.empty()) std::printf("        %s\n", detail.c_str());
    if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

SphereMeasure sphere_of(double v) {
    SphereMeasure s;
    s.value = v;
    s.method = SphereMethod::analytic;
    return s;
}

// ---------------------------------------------------------------- 1, 2
void criterion_operator_norm(int num, double alpha, double target) {
    const auto t0 = std::chrono::steady_clock::now();
    auto grid = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 14);
    const double v = operator_norm_oracle(alpha, *grid);
    const double secs = seconds_since(t0);
    const double rel = std::abs(v - target) / target;
    const bool ok = rel <= 0.01 && secs < 10.0;
    record(num,
           fmt("operator-norm oracle alpha=%.2g on [1e-6,1e6], 2^14 nodes: %.3g within 1%%",
               alpha, target),
           ok,
           fmt("computed %.6f (rel. gap %.2f%%), runtime %.2fs; window-limited analytic "
               "norm of this grid is %.6f, so the target needs a wider window",
               v, 100 * rel, secs,
               alpha == 0.0 ? 1.956414 : 3.714239));
}

// ---------------------------------------------------------------- 3
void criterion_plane() {
    const double C = sharp_constant_group(2, 2, 2, 0, sphere_of(2 * kPi));
    const bool exact = std::abs(C - 2 * kPi) <= 1e-14 * 2 * kPi;

    const auto t0 = std::chrono::steady_clock::now();
    SearchOptions opt;
    opt.budget = 300;
    const HardyParams params = HardyParams::make_balanced(2, 2, 0, 2.0);
    const SharpnessReport rep = extremal_search_group(
        params, 2.0, FamilyKind::truncated_power, RadialGrid::standard(),
        sphere_of(2 * kPi), opt);
    const double secs = seconds_since(t0);
    const bool ok = exact && rep.best_ratio >= 0.95 * 2 * kPi && secs < 30.0;
    record(3, "euclidean plane: C(2,2,2,0,2pi) = 2pi exactly, search attains 0.95", ok,
           fmt("C = %.15f, best ratio %.6f (attainment %.4f), %zu evals, %.2fs", C,
               rep.best_ratio, rep.attainment, rep.search_trace.size(), secs));
}

// ---------------------------------------------------------------- 4
void criterion_heisenberg() {
    // pre-registered brute-force Monte Carlo reference (independent run,
    // 1e8 box-rejection samples, seed 20260811): |S| = 19.74156000 +- 0.00155564
    constexpr double kPrereg = 19.74156000;
    constexpr double kPreregSe = 0.00155564;

    const GroupSpec g = GroupSpec::heisenberg1();
    const QuasiNormSpec nm{QuasiNormKind::koranyi_h1, 1.0};
    const SphereMeasure S = sphere_measure(g, nm, 1000000, 20260811);
    const double se = std::sqrt(S.estimate_stderr * S.estimate_stderr +
                                kPreregSe * kPreregSe);
    const bool sphere_ok = std::abs(S.value - kPrereg) <= 3.0 * se;

    SearchOptions opt;
    opt.budget = 300;
    const HardyParams params = HardyParams::make_balanced(2, 2, 0, 4.0);
    const SharpnessReport rep = extremal_search_group(
        params, 4.0, FamilyKind::truncated_power, RadialGrid::standard(), S, opt);
    const bool ok = sphere_ok && rep.best_ratio >= 0.95 * (S.value / 2.0);
    record(4, "heisenberg: koranyi |S| matches the pre-registered MC value, search attains 0.95",
           ok,
           fmt("|S| = %.6f +- %.6f vs pre-registered %.6f +- %.6f (3se = %.4f); "
               "attainment %.4f of |S|/2",
               S.value, S.estimate_stderr, kPrereg, kPreregSe, 3.0 * se, rep.attainment));
}

// ---------------------------------------------------------------- 5
void criterion_p_less_q() {
    // printed-formula reference (1/2)^{1/2} 3^{1/4}; the implemented constant
    // is the Bliss-extremal value 3^{1/2}/6^{1/4}, which the family attains.
    const double printed = std::sqrt(0.5) * std::pow(3.0, 0.25);
    const double D = sharp_constant_1d(2, 4, 0);
    const bool pinned_ok = std::abs(D - printed) <= 1e-12 * printed;

    SearchOptions opt;
    opt.budget = 300;
    const SharpnessReport rep =
        extremal_search_1d(2, 4, 0, FamilyKind::bliss, RadialGrid::standard(), opt);
    const bool bliss_ok = rep.attainment >= 0.90;
    record(5, "p<q constant: D(2,4,0) equals (1/2)^{1/2} 3^{1/4} to 1e-12; bliss attains 0.90",
           pinned_ok && bliss_ok,
           fmt("computed D = %.12f vs printed reference %.12f; u = 1 on [0,1] attains "
               "ratio 1.0 > reference, so the printed value cannot be the sharp bound; "
               "bliss family attains %.7f of the implemented constant",
               D, printed, rep.attainment));
}

// ---------------------------------------------------------------- 6
void criterion_continuity() {
    const double ps[] = {1.5, 2.0, 2.5, 3.0, 4.0};
    const double gaps[] = {0.2, 0.6, 1.2, 2.5, 5.0};
    double worst = 0.0;
    for (double p : ps)
        for (double d : gaps) {
            const double alpha = p - 1.0 - d;
            const double lim = p / (p - 1.0 - alpha);
            worst = std::max(worst,
                             std::abs(sharp_constant_1d(p, p + 1e-4, alpha) - lim) / lim);
        }
    record(6, "continuity at p = q: 5x5 grid, relative gap below 1e-3 at q-p = 1e-4",
           worst < 1e-3, fmt("max relative gap %.3g", worst));
}

// ---------------------------------------------------------------- 7
void criterion_beta_plus_q() {
    CounterRng rng(71);
    int bad = 0;
    for (int k = 0; k < 10000; ++k) {
        const double p = rng.uniform(4 * k, 1.05, 5.0);
        const double q = p + rng.uniform(4 * k + 1, 0.0, 3.0);
        const double Q = rng.uniform(4 * k + 2, 0.3, 8.0);
        const double alpha = Q * (p - 1.0) - std::exp(rng.uniform(4 * k + 3, -4.0, 2.0));
        if (!(beta_from_alpha(p, q, alpha, Q) + Q < 0.0)) ++bad;
    }
    record(7, "admissibility implication: 1e4 random tuples all give beta + Q < 0",
           bad == 0, fmt("%d exceptions", bad));
}

// ---------------------------------------------------------------- 8
void criterion_reduction_identity() {
    auto grid = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 12);
    struct Geo { double Q, S; };
    const Geo geos[] = {{2.0, 2 * kPi}, {4.0, 32.0}, {4.0, 2 * kPi * kPi}};
    CounterRng rng(83);
    double worst = 0.0;
    int n_checked = 0;
    for (const auto& geo : geos) {
        for (int t = 0; t < 10; ++t) {
            const double p = rng.uniform(100 * t, 1.15, 3.5);
            const double q = p + rng.uniform(100 * t + 1, 0.0, 2.0);
            const double alpha =
                geo.Q * (p - 1.0) - std::exp(rng.uniform(100 * t + 2, -1.0, 1.5));
            const HardyParams params = HardyParams::make_balanced(p, q, alpha, geo.Q);
            const ReductionExponents e = reduction_exponents(params, geo.Q);
            for (int j = 0; j < 20; ++j) {
                const double c = rng.uniform(1000 + 100 * t + j, 0.5, 2.0);
                const double w = rng.uniform(2000 + 100 * t + j, 0.4, 1.6);
                auto gfun = RadialFunction::sample(grid, [c, w](double r) {
                    const double l = std::log(r) - 0.3;
                    return c * std::exp(-0.5 * l * l / (w * w));
                });
                const double rg =
                    group_ratio_radial(gfun, params, geo.Q, sphere_of(geo.S)).ratio;
                RadialFunction h;
                h.grid = grid;
                h.values.resize(gfun.values.size());
                for (std::size_t i = 0; i < h.values.size(); ++i)
                    h.values[i] =
                        gfun.values[i] * std::pow(grid->nodes()[i], geo.Q - 1.0);
                const double r1 =
                    hardy_ratio_1d(h, p, q, e.alpha_tilde, e.beta_tilde).ratio;
                const double mapped = std::pow(geo.S, 1.0 + 1.0 / q - 1.0 / p) * r1;
                worst = std::max(worst, std::abs(rg - mapped) / rg);
                ++n_checked;
            }
        }
    }
    record(8, "radial reduction identity to 1e-10 (20 profiles x 10 tuples x 3 norms)",
           worst <= 1e-10, fmt("%d comparisons, worst relative gap %.3g", n_checked, worst));
}

// ---------------------------------------------------------------- 9
void criterion_no_violation() {
    auto grid = RadialGrid::make(1e-6, 1e6, std::size_t{1} << 12);
    CounterRng rng(91);
    int violations = 0;
    double worst = 0.0;
    int n_ratios = 0;

    struct Geo { double Q, S; };
    const Geo geos[] = {{2.0, 2 * kPi}, {4.0, 32.0}, {4.0, 2 * kPi * kPi}};

    for (int t = 0; t < 20; ++t) {
        const double p = rng.uniform(10 * t, 1.15, 3.5);
        const double q = (t % 2 == 0) ? p : p + rng.uniform(10 * t + 1, 0.05, 2.0);
        const Geo geo = geos[t % 3];
        const double a1 = 1.0 * (p - 1.0) - std::exp(rng.uniform(10 * t + 2, -1.5, 1.5));
        const double ag = geo.Q * (p - 1.0) - std::exp(rng.uniform(10 * t + 3, -1.5, 1.5));
        const double b1 = beta_from_alpha(p, q, a1, 1.0);
        const HardyParams hg = HardyParams::make_balanced(p, q, ag, geo.Q);
        const double C1 = sharp_constant_1d(p, q, a1);
        const double Cg = sharp_constant_group(p, q, geo.Q, ag, sphere_of(geo.S));
        for (int f = 0; f < 100; ++f) {
            const auto pw = random_piecewise_power(derive_seed(777, 1000 * t + f));
            const RadialFunction u = sample_piecewise_power(pw, grid);
            const double r1 = hardy_ratio_1d(u, p, q, a1, b1).ratio;
            const double rg = group_ratio_radial(u, hg, geo.Q, sphere_of(geo.S)).ratio;
            worst = std::max({worst, r1 / C1, rg / Cg});
            if (r1 > C1 * (1.0 + 1e-3) || rg > Cg * (1.0 + 1e-3)) ++violations;
            n_ratios += 2;
        }
    }

    // Monte Carlo path: ratio below constant within 3 standard errors, every run
    int mc_bad = 0;
    {
        const GroupSpec r2 = GroupSpec::isotropic(2);
        const QuasiNormSpec eu{QuasiNormKind::euclidean_isotropic, 1.0};
        const GroupSpec h1 = GroupSpec::heisenberg1();
        const QuasiNormSpec kor{QuasiNormKind::koranyi_h1, 1.0};
        const GroupSpec an = GroupSpec::anisotropic({1.0, 1.0, 2.0});
        const QuasiNormSpec sup{QuasiNormKind::anisotropic_sup, 1.0};
        const RadialProfile bump{[](double r) { return r <= 1.0 ? 1.0 - r * r : 0.0; },
                                 0.0, 1.0, "bump"};
        struct McCase {
            const GroupSpec* g;
            const QuasiNormSpec* n;
            double p, q, alpha;
        };
        const McCase cases[] = {
            {&r2, &eu, 2, 2, 0}, {&r2, &eu, 2, 3, 0.3}, {&h1, &kor, 2, 2, 0},
            {&h1, &kor, 2, 2, -1.0}, {&an, &sup, 2, 2, 0}, {&an, &sup, 2, 2.5, 1.0},
        };
        int ci = 0;
        for (const auto& mc : cases) {
            const SphereMeasure S = sphere_measure(*mc.g, *mc.n, 200000, 500 + ci);
            const HardyParams params =
                HardyParams::make_balanced(mc.p, mc.q, mc.alpha, mc.g->Q);
            const auto ev = radial_evaluator(bump, *mc.g, *mc.n);
            const RatioResult r =
                group_ratio_montecarlo(ev, params, *mc.g, *mc.n, S, 4000, 600 + ci);
            if (r.ratio > r.constant * (1.0 + 3.0 * r.ratio_stderr /
                                                  std::max(r.ratio, 1e-300)))
                ++mc_bad;
            // and the nested estimate agrees with the exact radial reduction
            const RatioResult rad = group_ratio_radial(
                RadialFunction::sample(RadialGrid::standard(), bump.value), params,
                mc.g->Q, S);
            if (std::abs(r.ratio - rad.ratio) > 3.0 * r.ratio_stderr) ++mc_bad;
            ++ci;
            n_ratios += 1;
        }
    }
    record(9, "inequality never violated: 100 functions x 20 tuples + MC runs",
           violations == 0 && mc_bad == 0,
           fmt("%d ratios, worst ratio/constant = %.6f, %d violations, %d MC violations",
               n_ratios, worst, violations, mc_bad));
}

// ---------------------------------------------------------------- 10
void criterion_duality() {
    auto grid = RadialGrid::standard();
    SearchOptions opt;
    opt.budget = 250;
    struct Case { double p, q, alpha; FamilyKind fam; };
    const Case cases[] = {
        {2, 2, 0, FamilyKind::truncated_power},
        {2, 4, 0, FamilyKind::bliss},
        {3, 3, 1, FamilyKind::truncated_power},
    };
    bool ok = true;
    std::ostringstream detail;
    for (const auto& c : cases) {
        const auto rep = duality_check(c.p, c.q, c.alpha, c.fam, grid, opt);
        ok = ok && rep.passed;
        detail << "(" << c.p << "," << c.q << "," << c.alpha << "): direct "
               << rep.value << " conj " << rep.oracle << "  ";
    }
    record(10, "duality: direct and conjugate best ratios agree within 5%, same constant",
           ok, detail.str());
}

// ---------------------------------------------------------------- 11
void criterion_bracket() {
    CounterRng rng(111);
    int bad = 0;
    for (int k = 0; k < 50; ++k) {
        const double p = rng.uniform(5 * k, 1.1, 4.0);
        const double q = (k % 4 == 0) ? p : p + rng.uniform(5 * k + 1, 0.0, 2.5);
        const double Q = rng.uniform(5 * k + 2, 0.4, 6.0);
        const double alpha = Q * (p - 1.0) - std::exp(rng.uniform(5 * k + 3, -3.0, 2.0));
        const double S = std::exp(rng.uniform(5 * k + 4, -0.5, 3.0));
        if (!bracket_check(p, q, Q, alpha, sphere_of(S)).passed) ++bad;
    }
    record(11, "sharp constant inside the two-sided bracket for 50 random tuples",
           bad == 0, fmt("%d exceptions (p = q cases sit exactly on the upper endpoint)", bad));
}

// ---------------------------------------------------------------- 12
void criterion_holder() {
    const GroupSpec g = GroupSpec::isotropic(2);
    const QuasiNormSpec nm{QuasiNormKind::euclidean_isotropic, 1.0};
    const SphereMeasure S = sphere_measure(g, nm, 200000, 3);

    auto radial_u = [](std::span<const double> x) {
        const double r = std::sqrt(x[0] * x[0] + x[1] * x[1]);
        return 1.0 + 0.5 * r;
    };
    const auto eq = holder_sphere_check(radial_u, 1.0, 2.0, g, nm, S, 400000, 121, true);

    auto nonradial_u = [](std::span<const double> x) {
        return 1.0 + (x[0] > 0.0 ? 1.0 : (x[0] < 0.0 ? -1.0 : 0.0));
    };
    const auto st = holder_sphere_check(nonradial_u, 1.0, 2.0, g, nm, S, 400000, 122, false);
    const bool strict = st.passed && st.details.at("margin_over_stderr") > 3.0;

    record(12, "sphere Hoelder step: radial equality, non-radial strict gap beyond 3 s.e.",
           eq.passed && strict,
           fmt("radial |lhs-rhs| = %.3g (3se %.3g); non-radial margin/se = %.1f",
               std::abs(eq.value - eq.oracle), eq.tolerance,
               st.details.at("margin_over_stderr")));
}

} // namespace

int main() {
    std::printf("hardylab acceptance suite\n");
    const auto t0 = std::chrono::steady_clock::now();

    criterion_operator_norm(1, 0.0, 2.0);
    criterion_operator_norm(2, 0.5, 4.0);
    criterion_plane();
    criterion_heisenberg();
    criterion_p_less_q();
    criterion_continuity();
    criterion_beta_plus_q();
    criterion_reduction_identity();
    criterion_no_violation();
    criterion_duality();
    criterion_bracket();
    criterion_holder();

    std::printf("\n%d of 12 criteria failed (%.1fs total)\n", g_failures,
                seconds_since(t0));
    return g_failures;
}
