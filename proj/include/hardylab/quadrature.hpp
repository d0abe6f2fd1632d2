#pragma once

#include "hardylab/grid.hpp"

namespace hardylab {

// Trapezoid rule in the log variable: int f(t) dt = int f(e^s) e^s ds.
double log_trapezoid(const RadialFunction& f);

// F(r_i) ~ int_{r_min}^{r_i} u(t) dt; the stretch (0, r_min) contributes zero.
RadialFunction cumulative_integral(const RadialFunction& u);

// T(r_i) ~ int_{r_i}^{r_max} u(t) dt; the tail beyond r_max contributes zero.
RadialFunction tail_integral(const RadialFunction& u);

// ( int |f(x)|^q x^w dx )^{1/q} over the grid. Throws NumericError naming the
// endpoint if the weighted integrand overflows.
double weighted_lq_norm(const RadialFunction& f, double weight_exponent, double q);

} // namespace hardylab
