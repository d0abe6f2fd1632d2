#pragma once

#include "hardylab/montecarlo.hpp"

namespace hardylab {

// Below this gap the p = q limit formula is used: the Gamma/Beta blocks are
// evaluated at arguments ~ 1/(q-p) and lose accuracy as q -> p.
inline constexpr double kPEqualQThreshold = 1e-8;

// Sharp constant of the 1D weighted inequality
//   ( int_0^inf (int_0^x u)^q x^beta dx )^{1/q} <= D ( int_0^inf u^p x^alpha dx )^{1/p}
// under alpha < p-1 and q(alpha+1) - p(beta+1) = pq. For p < q this is the
// Bliss-type constant attained by u = (1 + c x^{(q-p)/p})^{-q/(q-p)}:
//   D = ((p-1)/(p-1-alpha))^{1/p'+1/q} * A^{1/q} / B^{1/p},
//   A = (p/(q-p)) Beta(q/(q-p),  q(p-1)/(q-p)),
//   B = (p/(q-p)) Beta(p/(q-p),  p(q-1)/(q-p)),
// evaluated via log-Gamma. For p = q it degenerates to p/(p-1-alpha).
double sharp_constant_1d(double p, double q, double alpha);

// Group constant: |S|^{1+1/q-1/p} times the 1D constant at the radially
// reduced weight alpha_tilde = alpha - (p-1)(Q-1); equivalently the first
// factor becomes ((p-1)/(Q(p-1)-alpha))^{1/p'+1/q}. Requires alpha < Q(p-1).
// p = q: p |S| / (Q(p-1) - alpha).
double sharp_constant_group(double p, double q, double Q, double alpha,
                            const SphereMeasure& sphere);

// Conjugate (exterior-integral) inequality; requires alpha > Q(p-1) and the
// first factor becomes ((p-1)/(alpha-Q(p-1)))^{1/p'+1/q}.
double sharp_constant_conjugate_group(double p, double q, double Q, double alpha,
                                      const SphereMeasure& sphere);

// Two-sided non-sharp bracket the sharp constant must respect:
//   lower = |S|^{1/q+1/p'} / ( |beta+Q|^{1/q} (alpha(1-p')+Q)^{1/p'} ),
//   upper = p'^{1/p'} p^{1/q} * lower.
// At p = q the upper endpoint coincides with the sharp constant.
struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
};

Bracket constant_bracket(double p, double q, double Q, double alpha, double beta,
                         const SphereMeasure& sphere);

} // namespace hardylab
