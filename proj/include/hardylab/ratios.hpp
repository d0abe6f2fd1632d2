#pragma once

#include "hardylab/grid.hpp"
#include "hardylab/group.hpp"
#include "hardylab/montecarlo.hpp"
#include "hardylab/params.hpp"
#include "hardylab/report.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hardylab {

// LHS/RHS pair of a weighted inequality evaluated on one test function, with
// the sharp constant it is measured against. margin = constant - ratio, so a
// negative margin flags a violation.
struct RatioResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double constant = 0.0;
    double margin = 0.0;
    double lhs_stderr = 0.0;
    double rhs_stderr = 0.0;
    double ratio_stderr = 0.0;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
    std::map<std::string, double> details;
};

// 1D direct inequality: lhs uses the cumulative integral of u, rhs the
// weighted Lp norm of u. Requires 1D admissibility of (alpha, beta).
RatioResult hardy_ratio_1d(const RadialFunction& u, double p, double q, double alpha,
                           double beta);

// 1D conjugate inequality: lhs uses the tail integral; (alpha0, beta0) with
// alpha0 > p-1. The constant is shared with the direct side through
// alpha = 2p - 2 - alpha0.
RatioResult conjugate_ratio_1d(const RadialFunction& u, double p, double q,
                               double alpha0, double beta0);

// Group inequality for radial u(x) = g(|x|), computed through the exact polar
// reduction: with h(t) = g(t) t^{Q-1},
//   lhs = |S|^{1+1/q} * || cumulative(h) ||_{q, beta+Q-1},
//   rhs = |S|^{1/p}   * || g ||_{p, alpha+Q-1}.
RatioResult group_ratio_radial(const RadialFunction& g, const HardyParams& params,
                               double Q, const SphereMeasure& sphere);

// N-dimensional test function with a declared support box and the quasi-norm
// range of its support; used by the Monte Carlo paths.
struct BoxedEvaluator {
    std::function<double(std::span<const double>)> value;
    std::vector<double> box_lo, box_hi; // support box (coordinates)
    double norm_lo = 0.0;               // min quasi-norm over the support
    double norm_hi = 1.0;               // max quasi-norm over the support
    std::string name;
};

// Wraps a radial profile as an N-dim evaluator supported in the dilated
// bounding box of B(0, support_hi).
BoxedEvaluator radial_evaluator(const RadialProfile& profile, const GroupSpec& group,
                                const QuasiNormSpec& norm);

// Nested Monte Carlo estimate of the group inequality on an arbitrary
// (not necessarily radial) test function: outer samples over B(0, norm_hi),
// inner rejection sampling over B(0,|x|) with ceil(sqrt(samples)) points per
// outer point; the exterior region |x| > norm_hi, where the inner integral is
// constant, is integrated in closed polar form.
RatioResult group_ratio_montecarlo(const BoxedEvaluator& u, const HardyParams& params,
                                   const GroupSpec& group, const QuasiNormSpec& norm,
                                   const SphereMeasure& sphere, std::uint64_t samples,
                                   std::uint64_t seed);

// Checks the sphere Hoelder step on a thin quasi-annulus around radius rho:
//   ( int_S |u(rho s)| ds )^p  <=  |S|^{p-1} int_S |u(rho s)|^p ds,
// with equality for radial u. Both sides are annulus Monte Carlo estimates
// normalized by the radial annulus weight.
VerificationReport holder_sphere_check(
    const std::function<double(std::span<const double>)>& u, double rho, double p,
    const GroupSpec& group, const QuasiNormSpec& norm, const SphereMeasure& sphere,
    std::uint64_t samples, std::uint64_t seed, bool expect_radial = false);

} // namespace hardylab
