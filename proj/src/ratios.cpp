#include "hardylab/ratios.hpp"

#include "hardylab/constants.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/quadrature.hpp"
#include "hardylab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardylab {

namespace {

void require_1d_admissible(double p, double q, double alpha, double beta) {
    if (!(alpha < p - 1.0)) {
        std::ostringstream os;
        os << "alpha < p-1 violated: alpha = " << alpha << ", p-1 = " << p - 1.0;
        throw InadmissibleParamsError(os.str());
    }
    const double lhs = q * (alpha + 1.0) - p * (beta + 1.0);
    if (std::abs(lhs - p * q) > kAdmissibilityTol * p * q) {
        std::ostringstream os;
        os << "scaling relation q(alpha+1)-p(beta+1)=pq violated: got " << lhs
           << ", need " << p * q;
        throw InadmissibleParamsError(os.str());
    }
}

void require_conjugate_1d_admissible(double p, double q, double alpha0, double beta0) {
    if (!(alpha0 > p - 1.0)) {
        std::ostringstream os;
        os << "alpha0 > p-1 violated: alpha0 = " << alpha0 << ", p-1 = " << p - 1.0;
        throw InadmissibleParamsError(os.str());
    }
    const double lhs = q * (alpha0 + 1.0) - p * (beta0 + 1.0);
    if (std::abs(lhs - p * q) > kAdmissibilityTol * p * q) {
        std::ostringstream os;
        os << "scaling relation q(alpha0+1)-p(beta0+1)=pq violated: got " << lhs
           << ", need " << p * q;
        throw InadmissibleParamsError(os.str());
    }
}

bool has_negative(const RadialFunction& u) {
    return std::any_of(u.values.begin(), u.values.end(), [](double v) { return v < 0.0; });
}

void finish_ratio(RatioResult& r) {
    if (r.rhs == 0.0) {
        if (r.lhs == 0.0) {
            r.ratio = 0.0;
        } else {
            throw DegenerateInputError("rhs norm is zero while lhs is positive");
        }
    } else {
        r.ratio = r.lhs / r.rhs;
    }
    r.margin = r.constant - r.ratio;
}

} // namespace

RatioResult hardy_ratio_1d(const RadialFunction& u, double p, double q, double alpha,
                           double beta) {
    require_1d_admissible(p, q, alpha, beta);
    RatioResult r;
    if (has_negative(u)) r.warnings.push_back("signed input; inequality verified on |u|");

    const RadialFunction F = cumulative_integral(u);
    r.lhs = weighted_lq_norm(F, beta, q);
    r.rhs = weighted_lq_norm(u, alpha, p);
    r.constant = sharp_constant_1d(p, q, alpha);

    // lhs mass beyond r_max, assuming the cumulative stays at its last value
    const double b1 = beta + 1.0;
    if (b1 < 0.0 && F.values.back() != 0.0) {
        r.details["lhs_tail_bound"] =
            std::pow(std::abs(F.values.back()), q) *
            std::pow(u.grid->r_max(), b1) / (-b1);
    }
    finish_ratio(r);
    return r;
}

RatioResult conjugate_ratio_1d(const RadialFunction& u, double p, double q,
                               double alpha0, double beta0) {
    require_conjugate_1d_admissible(p, q, alpha0, beta0);
    RatioResult r;
    if (has_negative(u)) r.warnings.push_back("signed input; inequality verified on |u|");

    const RadialFunction T = tail_integral(u);
    r.lhs = weighted_lq_norm(T, beta0, q);
    r.rhs = weighted_lq_norm(u, alpha0, p);
    r.constant = sharp_constant_1d(p, q, -alpha0 - 2.0 + 2.0 * p);

    // lhs mass below r_min, assuming the tail integral stays at its first value
    const double b1 = beta0 + 1.0;
    if (b1 > 0.0 && T.values.front() != 0.0) {
        r.details["lhs_head_bound"] =
            std::pow(std::abs(T.values.front()), q) *
            std::pow(u.grid->r_min(), b1) / b1;
    }
    finish_ratio(r);
    return r;
}

RatioResult group_ratio_radial(const RadialFunction& g, const HardyParams& params,
                               double Q, const SphereMeasure& sphere) {
    if (!admissible_hardy_group(params, Q)) {
        std::ostringstream os;
        os << "group admissibility violated: need alpha < Q(p-1) and "
              "q(alpha+Q)-p(beta+Q) = pqQ (alpha = "
           << params.alpha << ", beta = " << params.beta << ", Q = " << Q << ")";
        throw InadmissibleParamsError(os.str());
    }
    RatioResult r;
    if (has_negative(g)) r.warnings.push_back("signed input; inequality verified on |u|");

    const auto& nodes = g.grid->nodes();
    RadialFunction h;
    h.grid = g.grid;
    h.values.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        h.values[i] = g.values[i] * std::pow(nodes[i], Q - 1.0);

    const double S = sphere.value;
    const RadialFunction F = cumulative_integral(h);
    r.lhs = std::pow(S, 1.0 + 1.0 / params.q) *
            weighted_lq_norm(F, params.beta + Q - 1.0, params.q);
    r.rhs = std::pow(S, 1.0 / params.p) *
            weighted_lq_norm(g, params.alpha + Q - 1.0, params.p);
    r.constant = sharp_constant_group(params.p, params.q, Q, params.alpha, sphere);

    const ReductionExponents e = reduction_exponents(params, Q);
    r.details["alpha_tilde"] = e.alpha_tilde;
    r.details["beta_tilde"] = e.beta_tilde;
    finish_ratio(r);
    return r;
}

BoxedEvaluator radial_evaluator(const RadialProfile& profile, const GroupSpec& group,
                                const QuasiNormSpec& norm) {
    validate_norm(group, norm);
    BoxedEvaluator ev;
    const double R = profile.support_hi;
    const double b = norm.bounding_radius;
    for (std::size_t d = 0; d < group.dim(); ++d) {
        const double half = b * std::pow(R, group.dilation_exponents[d]);
        ev.box_lo.push_back(-half);
        ev.box_hi.push_back(half);
    }
    ev.norm_lo = std::max(0.0, profile.support_lo);
    ev.norm_hi = R;
    ev.name = profile.name;
    auto nrm = make_norm_evaluator(group, norm);
    auto g = profile.value;
    ev.value = [nrm, g, R](std::span<const double> x) {
        const double rho = nrm(x);
        return rho <= R ? g(rho) : 0.0;
    };
    return ev;
}

RatioResult group_ratio_montecarlo(const BoxedEvaluator& u, const HardyParams& params,
                                   const GroupSpec& group, const QuasiNormSpec& norm,
                                   const SphereMeasure& sphere, std::uint64_t samples,
                                   std::uint64_t seed) {
    const double Q = group.Q;
    if (!admissible_hardy_group(params, Q)) {
        std::ostringstream os;
        os << "group admissibility violated: need alpha < Q(p-1) and "
              "q(alpha+Q)-p(beta+Q) = pqQ (alpha = "
           << params.alpha << ", beta = " << params.beta << ", Q = " << Q << ")";
        throw InadmissibleParamsError(os.str());
    }
    if (u.box_lo.size() != group.dim() || u.box_hi.size() != group.dim())
        throw InvalidInputError("evaluator box dimension does not match group");
    if (!(u.norm_hi > 0.0))
        throw InvalidInputError("evaluator needs a positive quasi-norm support radius");
    if (samples < 100) throw InvalidInputError("group_ratio_montecarlo: need >= 100 samples");

    const std::size_t N = group.dim();
    const double p = params.p, q = params.q, alpha = params.alpha, beta = params.beta;
    const double b = norm.bounding_radius;
    const double Ru = u.norm_hi;
    auto nrm = make_norm_evaluator(group, norm);

    RatioResult r;
    r.seed = seed;
    bool signed_seen = false;

    // rhs^p = int |u|^p |x|^alpha dx and M = int u dx over the support box
    double Vs = 1.0;
    for (std::size_t d = 0; d < N; ++d) Vs *= (u.box_hi[d] - u.box_lo[d]);
    {
        CounterRng rng(derive_seed(seed, 1));
        std::vector<double> x(N);
        double s1 = 0.0, s2 = 0.0, m1 = 0.0, m2 = 0.0;
        for (std::uint64_t i = 0; i < samples; ++i) {
            for (std::size_t d = 0; d < N; ++d)
                x[d] = rng.uniform(i * N + d, u.box_lo[d], u.box_hi[d]);
            const double uv = u.value(x);
            if (uv < 0.0) signed_seen = true;
            const double rho = nrm(x);
            double t = 0.0;
            if (uv != 0.0 && rho > 0.0)
                t = std::pow(std::abs(uv), p) * std::pow(rho, alpha);
            s1 += t;
            s2 += t * t;
            m1 += uv;
            m2 += uv * uv;
        }
        const double n = static_cast<double>(samples);
        const double mean = s1 / n;
        const double var = std::max(0.0, s2 / n - mean * mean);
        r.details["rhs_p"] = Vs * mean;
        r.details["rhs_p_stderr"] = Vs * std::sqrt(var / n);
        const double mmean = m1 / n;
        const double mvar = std::max(0.0, m2 / n - mmean * mmean);
        r.details["total_mass"] = Vs * mmean;
        r.details["total_mass_stderr"] = Vs * std::sqrt(mvar / n);
    }
    const double rhs_p = r.details["rhs_p"];
    const double se_rhs_p = r.details["rhs_p_stderr"];
    const double M = std::abs(r.details["total_mass"]);
    const double se_M = r.details["total_mass_stderr"];

    // lhs^q over B(0, Ru) by nested Monte Carlo; exterior in closed polar form.
    const std::uint64_t inner_m =
        static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(samples))));
    double Vout = std::pow(Ru, Q);
    for (std::size_t d = 0; d < N; ++d) Vout *= 2.0 * b;

    double s1 = 0.0, s2 = 0.0;
    double acc_sum = 0.0;
    std::uint64_t acc_outer = 0;
    {
        CounterRng rng(derive_seed(seed, 2));
        std::vector<double> x(N), y(N);
        for (std::uint64_t i = 0; i < samples; ++i) {
            for (std::size_t d = 0; d < N; ++d) {
                const double half = b * std::pow(Ru, group.dilation_exponents[d]);
                x[d] = rng.uniform(i * N + d, -half, half);
            }
            const double rho = nrm(x);
            double integrand = 0.0;
            if (rho > u.norm_lo && rho > 0.0) {
                CounterRng inner(derive_seed(seed, 1000 + i));
                double su = 0.0;
                std::uint64_t acc = 0;
                for (std::uint64_t j = 0; j < inner_m; ++j) {
                    for (std::size_t d = 0; d < N; ++d) {
                        const double half = b * std::pow(rho, group.dilation_exponents[d]);
                        y[d] = inner.uniform(j * N + d, -half, half);
                    }
                    if (nrm(y) < rho) {
                        ++acc;
                        const double uv = u.value(y);
                        if (uv < 0.0) signed_seen = true;
                        su += uv;
                    }
                }
                double Vx = std::pow(rho, Q);
                for (std::size_t d = 0; d < N; ++d) Vx *= 2.0 * b;
                const double inner_est = Vx * su / static_cast<double>(inner_m);
                integrand = std::pow(std::abs(inner_est), q) * std::pow(rho, beta);
                acc_sum += static_cast<double>(acc) / static_cast<double>(inner_m);
                ++acc_outer;
            }
            s1 += integrand;
            s2 += integrand * integrand;
        }
    }
    const double n = static_cast<double>(samples);
    const double mean = s1 / n;
    const double var = std::max(0.0, s2 / n - mean * mean);
    const double lhs_q_main = Vout * mean;
    const double se_main = Vout * std::sqrt(var / n);

    const double bQ = beta + Q; // < 0 under admissibility
    const double tail_factor = sphere.value * std::pow(Ru, bQ) / (-bQ);
    const double tail = std::pow(M, q) * tail_factor;
    const double se_tail_M = M > 0.0 ? q * std::pow(M, q - 1.0) * tail_factor * se_M : 0.0;
    const double se_tail_S =
        M > 0.0 ? std::pow(M, q) * std::pow(Ru, bQ) / (-bQ) * sphere.estimate_stderr : 0.0;

    const double lhs_q = lhs_q_main + tail;
    const double se_lhs_q =
        std::sqrt(se_main * se_main + se_tail_M * se_tail_M + se_tail_S * se_tail_S);

    r.rhs = rhs_p > 0.0 ? std::pow(rhs_p, 1.0 / p) : 0.0;
    r.rhs_stderr = rhs_p > 0.0 ? r.rhs * se_rhs_p / (p * rhs_p) : 0.0;
    r.lhs = lhs_q > 0.0 ? std::pow(lhs_q, 1.0 / q) : 0.0;
    r.lhs_stderr = lhs_q > 0.0 ? r.lhs * se_lhs_q / (q * lhs_q) : 0.0;
    r.constant = sharp_constant_group(p, q, Q, alpha, sphere);

    if (signed_seen) r.warnings.push_back("signed input; inequality verified on |u|");
    const double acc_rate = acc_outer > 0 ? acc_sum / static_cast<double>(acc_outer) : 1.0;
    r.details["inner_acceptance_rate"] = acc_rate;
    r.details["inner_samples_per_outer"] = static_cast<double>(inner_m);
    r.details["lhs_tail_fraction"] = lhs_q > 0.0 ? tail / lhs_q : 0.0;
    if (acc_outer > 0 && acc_rate < 1e-3)
        r.warnings.push_back("inner-sample starvation: quasi-ball acceptance rate below 1e-3");

    finish_ratio(r);
    if (r.rhs > 0.0) {
        r.ratio_stderr = r.ratio * std::sqrt((r.lhs_stderr / std::max(r.lhs, 1e-300)) *
                                                 (r.lhs_stderr / std::max(r.lhs, 1e-300)) +
                                             (r.rhs_stderr / r.rhs) * (r.rhs_stderr / r.rhs));
        const double bound = r.constant * (1.0 + 3.0 * (r.ratio > 0.0
                                                            ? r.ratio_stderr / r.ratio
                                                            : 0.0));
        r.details["mc_inequality_bound"] = bound;
        if (r.ratio > bound)
            r.warnings.push_back("ratio exceeds constant beyond 3 standard errors");
    }
    return r;
}

VerificationReport holder_sphere_check(
    const std::function<double(std::span<const double>)>& u, double rho, double p,
    const GroupSpec& group, const QuasiNormSpec& norm, const SphereMeasure& sphere,
    std::uint64_t samples, std::uint64_t seed, bool expect_radial) {
    if (!(rho > 0.0)) throw InvalidInputError("holder_sphere_check: rho must be positive");
    if (!(p >= 1.0)) throw InvalidInputError("holder_sphere_check: need p >= 1");
    validate_norm(group, norm);

    constexpr double eps = 1e-2; // annulus half-width, relative
    const double r_hi = rho * (1.0 + eps);
    const double r_lo = rho * (1.0 - eps);
    const std::size_t N = group.dim();
    const double b = norm.bounding_radius;
    const double Q = group.Q;
    auto nrm = make_norm_evaluator(group, norm);

    double Vbox = 1.0;
    std::vector<double> half(N);
    for (std::size_t d = 0; d < N; ++d) {
        half[d] = b * std::pow(r_hi, group.dilation_exponents[d]);
        Vbox *= 2.0 * half[d];
    }

    CounterRng rng(seed);
    std::vector<double> x(N);
    double a1 = 0.0, a2 = 0.0, p1 = 0.0, p2 = 0.0;
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        for (std::size_t d = 0; d < N; ++d)
            x[d] = rng.uniform(i * N + d, -half[d], half[d]);
        const double rr = nrm(x);
        double fa = 0.0, fp = 0.0;
        if (rr >= r_lo && rr <= r_hi) {
            ++hits;
            const double uv = std::abs(u(x));
            fa = uv;
            fp = std::pow(uv, p);
        }
        a1 += fa;
        a2 += fa * fa;
        p1 += fp;
        p2 += fp * fp;
    }
    if (hits == 0)
        throw SamplingError("holder_sphere_check: no samples landed in the annulus");

    const double n = static_cast<double>(samples);
    const double w_r = std::pow(rho, Q) *
                       (std::pow(1.0 + eps, Q) - std::pow(1.0 - eps, Q)) / Q;

    const double A = Vbox * (a1 / n);
    const double seA = Vbox * std::sqrt(std::max(0.0, a2 / n - (a1 / n) * (a1 / n)) / n);
    const double P = Vbox * (p1 / n);
    const double seP = Vbox * std::sqrt(std::max(0.0, p2 / n - (p1 / n) * (p1 / n)) / n);

    const double U = A / w_r;   // int_S |u(rho s)| ds
    const double Pm = P / w_r;  // int_S |u(rho s)|^p ds
    const double seU = seA / w_r;
    const double sePm = seP / w_r;

    const double S = sphere.value;
    const double lhs = std::pow(U, p);
    const double se_lhs = U > 0.0 ? p * std::pow(U, p - 1.0) * seU : 0.0;
    const double rhs = std::pow(S, p - 1.0) * Pm;
    const double se_rhs = std::sqrt(
        std::pow(std::pow(S, p - 1.0) * sePm, 2) +
        std::pow((p - 1.0) * std::pow(S, std::max(p - 2.0, 0.0)) * Pm * sphere.estimate_stderr, 2));
    const double se = std::sqrt(se_lhs * se_lhs + se_rhs * se_rhs);
    const double slack = 1e-12 * std::max(lhs, rhs);

    VerificationReport rep;
    rep.check = "holder-sphere";
    rep.value = lhs;
    rep.oracle = rhs;
    rep.stderr_ = se;
    rep.tolerance = 3.0 * se + slack;
    rep.seed = seed;
    rep.passed = lhs <= rhs + rep.tolerance;
    if (expect_radial) rep.passed = rep.passed && std::abs(lhs - rhs) <= rep.tolerance;
    rep.details["U"] = U;
    rep.details["int_u_p"] = Pm;
    rep.details["margin"] = rhs - lhs;
    rep.details["margin_over_stderr"] = se > 0.0 ? (rhs - lhs) / se : 0.0;
    rep.details["annulus_hits"] = static_cast<double>(hits);
    rep.note = expect_radial ? "radial input: equality expected within noise"
                             : "U(rho)^p <= |S|^{p-1} int_S |u|^p";
    return rep;
}

} // namespace hardylab
