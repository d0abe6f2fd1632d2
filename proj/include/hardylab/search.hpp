#pragma once

#include "hardylab/families.hpp"
#include "hardylab/grid.hpp"
#include "hardylab/montecarlo.hpp"
#include "hardylab/params.hpp"
#include "hardylab/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hardylab {

struct SearchOptions {
    int budget = 300; // total ratio evaluations
    int cycles = 3;   // coordinate-descent sweeps
    std::uint64_t seed = 0;
};

struct TraceEntry {
    std::vector<double> params;
    double ratio = 0.0;
    double best_so_far = 0.0;
};

struct SharpnessReport {
    double target_constant = 0.0;
    double best_ratio = 0.0;
    double attainment = 0.0; // best_ratio / target_constant
    std::vector<double> best_parameters;
    std::vector<std::string> parameter_names;
    std::optional<double> oracle_value;
    std::vector<TraceEntry> search_trace;
    std::uint64_t seed = 0;
};

// Maximum of a (near-)unimodal function on [lo, hi] by golden-section probes;
// returns the best probed point. Uses at most max_evals calls of f.
std::pair<double, double> golden_section_max(const std::function<double(double)>& f,
                                             double lo, double hi, int max_evals);

// Maximizes hardy_ratio_1d over the family parameters (cyclic coordinate
// descent with golden-section line searches). beta comes from the scaling
// relation. A budget <= 1 evaluates just the family's initial point.
SharpnessReport extremal_search_1d(double p, double q, double alpha, FamilyKind family,
                                   GridPtr grid, const SearchOptions& options);

// Conjugate-side search: the same family parametrization evaluated through the
// mirror map u -> u(1/t)/t^2 against conjugate_ratio_1d with (alpha0, beta0).
SharpnessReport extremal_search_conjugate_1d(double p, double q, double alpha0,
                                             FamilyKind family, GridPtr grid,
                                             const SearchOptions& options);

// Group search through the radial reduction; attainment is measured against
// sharp_constant_group. Radial families suffice: the sphere Hoelder step is
// an equality on radial functions.
SharpnessReport extremal_search_group(const HardyParams& params, double Q,
                                      FamilyKind family, GridPtr grid,
                                      const SphereMeasure& sphere,
                                      const SearchOptions& options);

// Runs the direct-side and conjugate-side searches and checks that the best
// ratios agree within 5% of the shared sharp constant, and that both targets
// coincide to relative 1e-12.
VerificationReport duality_check(double p, double q, double alpha, FamilyKind family,
                                 GridPtr grid, const SearchOptions& options);

// Checks that the sharp group constant lies inside the two-sided non-sharp
// bracket; beta is derived from the scaling relation.
VerificationReport bracket_check(double p, double q, double Q, double alpha,
                                 const SphereMeasure& sphere);

} // namespace hardylab
