#include "hardylab/params.hpp"

#include "hardylab/errors.hpp"

#include <cmath>
#include <sstream>

namespace hardylab {

double conjugate_exponent(double p) {
    if (!(p > 1.0)) throw InvalidInputError("conjugate exponent needs p > 1");
    return p / (p - 1.0);
}

HardyParams HardyParams::make(double p, double q, double alpha, double beta) {
    if (!(p > 1.0) || !std::isfinite(p))
        throw InvalidInputError("HardyParams: need p > 1");
    if (!(q >= p) || !std::isfinite(q))
        throw InvalidInputError("HardyParams: need p <= q < inf");
    if (!std::isfinite(alpha) || !std::isfinite(beta))
        throw InvalidInputError("HardyParams: alpha, beta must be finite");
    HardyParams h;
    h.p = p;
    h.q = q;
    h.alpha = alpha;
    h.beta = beta;
    h.p_conj = conjugate_exponent(p);
    return h;
}

HardyParams HardyParams::make_balanced(double p, double q, double alpha, double Q) {
    return make(p, q, alpha, beta_from_alpha(p, q, alpha, Q));
}

double beta_from_alpha(double p, double q, double alpha, double Q) {
    return q * (alpha + Q) / p - q * Q - Q;
}

namespace {

bool scaling_relation_holds(const HardyParams& h, double Q, double tol) {
    const double lhs = h.q * (h.alpha + Q) - h.p * (h.beta + Q);
    const double target = h.p * h.q * Q;
    return std::abs(lhs - target) <= tol * std::abs(target);
}

} // namespace

bool admissible_hardy_group(const HardyParams& params, double Q, double tol) {
    return params.alpha < Q * (params.p - 1.0) && scaling_relation_holds(params, Q, tol);
}

bool admissible_conjugate_group(const HardyParams& params, double Q, double tol) {
    return params.alpha > Q * (params.p - 1.0) && scaling_relation_holds(params, Q, tol);
}

ConjugateParams conjugate_params_1d(double p, double alpha, double q) {
    if (!(alpha < p - 1.0)) {
        std::ostringstream os;
        os << "alpha < p-1 violated: alpha = " << alpha << ", p-1 = " << p - 1.0;
        throw InadmissibleParamsError(os.str());
    }
    ConjugateParams c;
    c.alpha0 = -alpha - 2.0 + 2.0 * p;
    c.beta0 = q * (c.alpha0 + 1.0) / p - q - 1.0;
    return c;
}

ReductionExponents reduction_exponents(const HardyParams& params, double Q) {
    const double p = params.p, q = params.q;
    ReductionExponents e;
    e.delta = 1.0 / p - 1.0 / q;
    e.lambda = Q * e.delta;
    e.mu = params.alpha / p;
    e.gamma = e.mu - (Q - 1.0) / params.p_conj;
    e.alpha_1d = params.alpha / Q;
    e.beta_1d = params.beta / Q;
    e.alpha_tilde = params.alpha - (p - 1.0) * (Q - 1.0);
    e.beta_tilde = params.beta + Q - 1.0;

    // exponent bookkeeping identity of the polar reduction
    const double left = (Q - 1.0) / q + e.lambda + e.mu - Q;
    const double right = e.delta + e.gamma - 1.0;
    if (std::abs(left - right) > 1e-12 * std::max(1.0, std::abs(right))) {
        std::ostringstream os;
        os << "reduction exponent identity violated: " << left << " vs " << right;
        throw NumericError(os.str());
    }
    return e;
}

} // namespace hardylab
