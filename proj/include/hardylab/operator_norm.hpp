#pragma once

#include "hardylab/grid.hpp"

#include <cstdint>

namespace hardylab {

struct OperatorNormOptions {
    int max_iters = 4000;
    double tol = 1e-11; // relative change of the Rayleigh quotient
    std::uint64_t seed = 1;
};

// Independent cross-check of the p = q = 2 sharp constant: discretizes the
// map  v |-> x^{beta/2} int_0^x t^{-alpha/2} v(t) dt  (beta = alpha - 2) on
// the grid, and power-iterates K*K in the weighted inner product to its top
// singular value. Converges to the norm of the operator restricted to the
// grid window [r_min, r_max]; the window norm approaches 2/(1-alpha) as the
// window widens (on a window of log-width T it equals 1/sqrt(c^2+w^2) with
// c = (1-alpha)/2 and tan(wT) = -w/c). Requires alpha < 1.
double operator_norm_oracle(double alpha, const RadialGrid& grid,
                            const OperatorNormOptions& options = {});

} // namespace hardylab
