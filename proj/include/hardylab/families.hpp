#pragma once

#include "hardylab/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hardylab {

// Parametric test-function families. Parameter layout:
//   power:           { s }                      t^s on the whole grid
//   truncated_power: { s, log10_eps, log10_R }  t^s on [eps, R], else 0
//   bliss:           { ln_c, a, b }             (1 + c t^a)^{-b}
//   indicator:       { log10_lo, log10_hi }     1 on [lo, hi], else 0
//   gaussian:        { log10_center, width }    exp(-((ln t - ln c)/width)^2)
enum class FamilyKind { power, truncated_power, bliss, indicator, gaussian };

struct FamilySpec {
    FamilyKind kind = FamilyKind::truncated_power;
    std::vector<double> params;
};

const char* to_string(FamilyKind kind);
bool family_kind_from_string(const std::string& s, FamilyKind& out);
std::vector<std::string> family_parameter_names(FamilyKind kind);

double family_value(const FamilySpec& spec, double t);

// Throws InadmissibleFamilyError naming the divergent integral when the
// continuum rhs norm int u^p t^alpha dt is infinite for this member.
void check_family_admissible(const FamilySpec& spec, double p, double alpha);

RadialFunction sample_family(const FamilySpec& spec, GridPtr grid);

// The mirror map u(t) -> u(1/t) / t^2, which carries the direct inequality
// into the conjugate one with (alpha0, beta0) = (2p-2-alpha, -beta-2).
RadialFunction sample_family_mirrored(const FamilySpec& spec, GridPtr grid);

// Nonnegative piecewise power function on [1e-4, 1e4]: up to 4 pieces with
// log-uniform breakpoints, exponents in [-1.2, 1.2], coefficients in e^[-1,1].
struct PiecewisePower {
    std::vector<double> breaks; // log10 breakpoints, size k+1
    std::vector<double> coeff;  // size k
    std::vector<double> expo;   // size k
    double value(double t) const;
};

PiecewisePower random_piecewise_power(std::uint64_t seed);
RadialFunction sample_piecewise_power(const PiecewisePower& f, GridPtr grid);

} // namespace hardylab
