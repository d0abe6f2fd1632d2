#pragma once

namespace hardylab {

// Relative tolerance for the scaling relation q(alpha+Q) - p(beta+Q) = pqQ
// when beta is supplied by the caller rather than derived.
inline constexpr double kAdmissibilityTol = 1e-10;

double conjugate_exponent(double p); // p' = p/(p-1)

// Exponent tuple (p, q, alpha, beta) of the weighted inequality, 1 < p <= q.
struct HardyParams {
    double p = 2.0;
    double q = 2.0;
    double alpha = 0.0;
    double beta = 0.0;
    double p_conj = 2.0; // derived

    static HardyParams make(double p, double q, double alpha, double beta);
    // beta solved from the scaling relation for this Q, so the relation holds
    // exactly by construction.
    static HardyParams make_balanced(double p, double q, double alpha, double Q);
};

// beta = q(alpha+Q)/p - qQ - Q, the unique solution of the scaling relation.
double beta_from_alpha(double p, double q, double alpha, double Q);

// alpha < Q(p-1) together with the scaling relation (within tol, relative).
bool admissible_hardy_group(const HardyParams& params, double Q,
                            double tol = kAdmissibilityTol);

// alpha > Q(p-1) together with the same scaling relation.
bool admissible_conjugate_group(const HardyParams& params, double Q,
                                double tol = kAdmissibilityTol);

// Parameters of the conjugate (tail-integral) inequality produced from the
// direct one: alpha0 = -alpha - 2 + 2p, beta0 from the 1D scaling relation.
struct ConjugateParams {
    double alpha0 = 0.0;
    double beta0 = 0.0;
};

ConjugateParams conjugate_params_1d(double p, double alpha, double q);

// Exponents appearing in the polar reduction of the group inequality to 1D.
struct ReductionExponents {
    double lambda = 0.0;      // Q(1/p - 1/q)
    double mu = 0.0;          // alpha/p
    double gamma = 0.0;       // mu - (Q-1)/p'
    double delta = 0.0;       // lambda/Q = 1/p - 1/q
    double alpha_1d = 0.0;    // alpha/Q
    double beta_1d = 0.0;     // beta/Q
    double alpha_tilde = 0.0; // alpha - (p-1)(Q-1): weight of the reduced 1D rhs
    double beta_tilde = 0.0;  // beta + Q - 1:       weight of the reduced 1D lhs
};

ReductionExponents reduction_exponents(const HardyParams& params, double Q);

} // namespace hardylab
