#include "hardylab/montecarlo.hpp"

#include "hardylab/errors.hpp"
#include "hardylab/grid.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/rng.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace hardylab {

const char* to_string(SphereMethod m) {
    return m == SphereMethod::analytic ? "analytic" : "monte_carlo";
}

SphereMeasure half_line_sphere() {
    SphereMeasure s;
    s.value = 1.0;
    s.estimate_stderr = 0.0;
    s.method = SphereMethod::analytic;
    return s;
}

namespace {

bool is_isotropic(const GroupSpec& g) {
    for (double v : g.dilation_exponents)
        if (v != 1.0) return false;
    return true;
}

// stderr of a binomial proportion with a half-count floor, so it stays
// positive even when every sample lands inside (sup-norm ball == its box).
double proportion_stderr(std::uint64_t hits, std::uint64_t n) {
    const double pt = (static_cast<double>(hits) + 0.5) / (static_cast<double>(n) + 1.0);
    return std::sqrt(pt * (1.0 - pt) / static_cast<double>(n));
}

} // namespace

void verify_bounding_box(const GroupSpec& group, const QuasiNormSpec& norm,
                         std::uint64_t samples_per_face, std::uint64_t seed) {
    validate_norm(group, norm);
    const std::size_t n = group.dim();
    const double b = norm.bounding_radius;
    auto eval = make_norm_evaluator(group, norm);
    CounterRng rng(seed);
    std::vector<double> x(n);
    std::uint64_t ctr = 0;
    for (std::size_t face_dim = 0; face_dim < n; ++face_dim) {
        for (int side = 0; side < 2; ++side) {
            for (std::uint64_t s = 0; s < samples_per_face; ++s) {
                for (std::size_t d = 0; d < n; ++d) x[d] = rng.uniform(ctr++, -b, b);
                x[face_dim] = side ? b : -b;
                const double nv = eval(x);
                if (nv < 1.0 - 1e-12) {
                    std::ostringstream os;
                    os << "bounding box [-" << b << "," << b << "]^" << n
                       << " violated: face point with quasi-norm " << nv << " < 1";
                    throw GeometryConfigError(os.str());
                }
            }
        }
    }
}

McEstimate ball_volume(const GroupSpec& group, const QuasiNormSpec& norm, double radius,
                       std::uint64_t samples, std::uint64_t seed) {
    if (!(radius > 0.0)) throw InvalidInputError("ball_volume: radius must be positive");
    if (samples < 10'000) throw InvalidInputError("ball_volume: need at least 1e4 samples");
    verify_bounding_box(group, norm, 256, derive_seed(seed, 0xb0c5));

    const std::size_t n = group.dim();
    const double b = norm.bounding_radius;
    auto eval = make_norm_evaluator(group, norm);
    CounterRng rng(seed);
    std::vector<double> x(n);

    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t d = 0; d < n; ++d)
            x[d] = rng.uniform(i * n + d, -b, b);
        if (eval(x) < 1.0) ++hits;
    }

    double box = 1.0;
    for (std::size_t d = 0; d < n; ++d) box *= 2.0 * b;

    const double scale = std::pow(radius, group.Q);
    McEstimate est;
    est.value = box * (static_cast<double>(hits) / static_cast<double>(samples)) * scale;
    est.stderr_ = box * proportion_stderr(hits, samples) * scale;
    return est;
}

SphereMeasure sphere_measure(const GroupSpec& group, const QuasiNormSpec& norm,
                             std::uint64_t samples, std::uint64_t seed) {
    validate_norm(group, norm);
    SphereMeasure s;
    s.seed = seed;
    if (norm.kind == QuasiNormKind::euclidean_isotropic && is_isotropic(group)) {
        // |S| = Q * vol(B_1) = N * pi^{N/2} / Gamma(N/2 + 1); the N = 1 value
        // (the two-point sphere) is returned exactly rather than through the
        // Gamma quotient.
        const double N = static_cast<double>(group.dim());
        s.value = group.dim() == 1
                      ? 2.0
                      : N * std::pow(std::numbers::pi, N / 2.0) / std::tgamma(N / 2.0 + 1.0);
        s.method = SphereMethod::analytic;
        return s;
    }
    const McEstimate vol = ball_volume(group, norm, 1.0, samples, seed);
    s.value = group.Q * vol.value;
    s.estimate_stderr = group.Q * vol.stderr_;
    s.method = SphereMethod::monte_carlo;
    s.samples = samples;
    return s;
}

VerificationReport polar_consistency_check(const RadialProfile& profile,
                                           const GroupSpec& group,
                                           const QuasiNormSpec& norm,
                                           const SphereMeasure& sphere,
                                           std::uint64_t samples, std::uint64_t seed) {
    validate_norm(group, norm);
    if (!(profile.support_hi > 0.0) || !(profile.support_hi > profile.support_lo))
        throw InvalidInputError("polar_consistency_check: bad profile support");

    // 1D side: |S| * int g(r) r^{Q-1} dr on a dedicated log grid over the support.
    const double lo = profile.support_lo > 0.0 ? profile.support_lo
                                               : profile.support_hi * 1e-6;
    auto grid = RadialGrid::make(lo, profile.support_hi, std::size_t{1} << 14);
    const double Q = group.Q;
    RadialFunction integrand = RadialFunction::sample(grid, [&](double r) {
        return profile.value(r) * std::pow(r, Q - 1.0);
    });
    const double one_d = log_trapezoid(integrand);
    const double side_1d = sphere.value * one_d;

    // N-dimensional side: Monte Carlo over the dilated bounding box.
    const std::size_t n = group.dim();
    const double b = norm.bounding_radius;
    auto eval = make_norm_evaluator(group, norm);
    CounterRng rng(seed);
    std::vector<double> x(n);

    double box = 1.0;
    for (std::size_t d = 0; d < n; ++d)
        box *= 2.0 * b * std::pow(profile.support_hi, group.dilation_exponents[d]);

    double sum = 0.0, sum2 = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t d = 0; d < n; ++d) {
            const double half = b * std::pow(profile.support_hi, group.dilation_exponents[d]);
            x[d] = rng.uniform(i * n + d, -half, half);
        }
        const double rho = eval(x);
        double v = 0.0;
        if (rho <= profile.support_hi) {
            v = profile.value(rho);
            if (!std::isfinite(v)) {
                std::ostringstream os;
                os << "non-finite profile value at r = " << rho;
                throw NumericError(os.str());
            }
        }
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / static_cast<double>(samples);
    const double var = std::max(0.0, sum2 / static_cast<double>(samples) - mean * mean);
    const double side_nd = box * mean;
    const double se_nd = box * std::sqrt(var / static_cast<double>(samples));

    const double se = std::sqrt(se_nd * se_nd +
                                (one_d * sphere.estimate_stderr) * (one_d * sphere.estimate_stderr));
    const double slack = 1e-9 * std::max(std::abs(side_1d), std::abs(side_nd));

    VerificationReport rep;
    rep.check = "polar-consistency:" + profile.name + ":" + to_string(norm.kind);
    rep.value = side_nd;
    rep.oracle = side_1d;
    rep.stderr_ = se;
    rep.tolerance = 3.0 * se + slack;
    rep.passed = std::abs(side_nd - side_1d) <= rep.tolerance;
    rep.seed = seed;
    rep.details["relative_discrepancy"] =
        side_1d != 0.0 ? std::abs(side_nd - side_1d) / std::abs(side_1d) : 0.0;
    rep.details["samples"] = static_cast<double>(samples);
    rep.note = "N-dim Monte Carlo vs |S| * 1D radial quadrature";
    return rep;
}

} // namespace hardylab
