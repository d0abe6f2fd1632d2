#include "hardylab/search.hpp"

#include "hardylab/constants.hpp"
#include "hardylab/errors.hpp"
#include "hardylab/ratios.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardylab {

std::pair<double, double> golden_section_max(const std::function<double(double)>& f,
                                             double lo, double hi, int max_evals) {
    if (!(hi > lo)) throw InvalidInputError("golden_section_max: need lo < hi");
    if (max_evals < 2) {
        const double x = 0.5 * (lo + hi);
        return {x, f(x)};
    }
    constexpr double gr = 0.6180339887498949; // (sqrt(5)-1)/2
    double a = lo, b = hi;
    double x1 = b - gr * (b - a);
    double x2 = a + gr * (b - a);
    double f1 = f(x1), f2 = f(x2);
    int used = 2;
    double bestx = f1 >= f2 ? x1 : x2;
    double bestf = std::max(f1, f2);
    while (used < max_evals) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = f(x2);
            if (f2 > bestf) { bestf = f2; bestx = x2; }
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = f(x1);
            if (f1 > bestf) { bestf = f1; bestx = x1; }
        }
        ++used;
    }
    return {bestx, bestf};
}

namespace {

struct SearchBox {
    std::vector<double> init, lo, hi;
};

// Parameter boxes centered at the near-critical members. alpha_eff is the
// rhs weight exponent of the 1D problem the family feeds (alpha for the 1D
// search, alpha + Q - 1 for the group search through the radial profile g).
SearchBox family_box(FamilyKind kind, double p, double q, double alpha_eff,
                     const RadialGrid& grid) {
    const double l_lo = std::log10(grid.r_min());
    const double l_hi = std::log10(grid.r_max());
    SearchBox b;
    switch (kind) {
        case FamilyKind::truncated_power: {
            const double s_crit = -(1.0 + alpha_eff) / p;
            b.init = {s_crit, l_lo, l_hi - 1.5};
            b.lo = {s_crit - 0.45, l_lo, l_hi - 5.0};
            b.hi = {s_crit + 0.45, l_lo + 4.0, l_hi - 0.5};
            break;
        }
        case FamilyKind::power: {
            const double s_crit = -(1.0 + alpha_eff) / p;
            b.init = {s_crit};
            b.lo = {s_crit - 0.45};
            b.hi = {s_crit + 0.45};
            break;
        }
        case FamilyKind::bliss: {
            double a_star = 1.0, b_star = 2.0;
            if (q - p >= kPEqualQThreshold) {
                a_star = (q - p) / p;
                b_star = q / (q - p);
            }
            const double a_lo = std::max(0.15, 0.35 * a_star);
            const double b_floor = (1.0 + alpha_eff + 0.1) / (p * a_lo);
            const double b_lo = std::max({0.2, 0.55 * b_star, b_floor});
            b.init = {0.0, a_star, std::max(b_star, b_lo)};
            b.lo = {-6.0, a_lo, b_lo};
            b.hi = {6.0, 3.0 * a_star + 0.5, 4.0 * b_star + 0.5};
            break;
        }
        case FamilyKind::indicator:
            b.init = {l_lo + 1.0, l_hi - 2.0};
            b.lo = {l_lo, l_lo + 2.0};
            b.hi = {l_hi - 2.5, l_hi - 0.5};
            break;
        case FamilyKind::gaussian:
            b.init = {0.5 * (l_lo + l_hi), 2.0};
            b.lo = {l_lo + 2.0, 0.3};
            b.hi = {l_hi - 2.0, 8.0};
            break;
    }
    return b;
}

struct Driver {
    std::function<double(const std::vector<double>&)> objective;
    int budget = 300;
    int used = 0;
    std::vector<TraceEntry> trace;
    double best = -1.0;
    std::vector<double> best_params;

    double eval(const std::vector<double>& th) {
        const double r = objective(th);
        ++used;
        if (r > best) {
            best = r;
            best_params = th;
        }
        trace.push_back({th, r, best});
        return r;
    }
};

void coordinate_descent(Driver& d, const SearchBox& box, int cycles) {
    std::vector<double> th = box.init;
    double cur = d.eval(th);
    if (d.budget <= 1) return;
    const int dim = static_cast<int>(th.size());
    const int per_line = std::max(6, d.budget / std::max(1, cycles * dim));
    for (int c = 0; c < cycles; ++c) {
        for (int k = 0; k < dim; ++k) {
            const int rem = d.budget - d.used;
            if (rem < 6) return;
            auto line = [&](double x) {
                auto t2 = th;
                t2[static_cast<std::size_t>(k)] = x;
                return d.eval(t2);
            };
            auto [bx, bf] = golden_section_max(line, box.lo[static_cast<std::size_t>(k)],
                                               box.hi[static_cast<std::size_t>(k)],
                                               std::min(per_line, rem));
            if (bf >= cur) {
                th[static_cast<std::size_t>(k)] = bx;
                cur = bf;
            }
        }
    }
}

SharpnessReport run_search(FamilyKind kind, const SearchBox& box, double target,
                           const std::function<double(const FamilySpec&)>& ratio_of,
                           const SearchOptions& options) {
    Driver d;
    d.budget = std::max(1, options.budget);
    d.objective = [&](const std::vector<double>& th) {
        FamilySpec spec{kind, th};
        try {
            return ratio_of(spec);
        } catch (const InadmissibleFamilyError&) {
            return 0.0; // probe outside the admissible family region
        }
    };
    coordinate_descent(d, box, std::max(1, options.cycles));

    SharpnessReport rep;
    rep.target_constant = target;
    rep.best_ratio = d.best;
    rep.attainment = target > 0.0 ? d.best / target : 0.0;
    rep.best_parameters = d.best_params;
    rep.parameter_names = family_parameter_names(kind);
    rep.search_trace = std::move(d.trace);
    rep.seed = options.seed;
    return rep;
}

} // namespace

SharpnessReport extremal_search_1d(double p, double q, double alpha, FamilyKind family,
                                   GridPtr grid, const SearchOptions& options) {
    if (!(alpha < p - 1.0)) {
        std::ostringstream os;
        os << "alpha < p-1 violated: alpha = " << alpha;
        throw InadmissibleParamsError(os.str());
    }
    const double beta = beta_from_alpha(p, q, alpha, 1.0);
    const SearchBox box = family_box(family, p, q, alpha, *grid);
    check_family_admissible({family, box.init}, p, alpha); // initial point must be sound
    const double target = sharp_constant_1d(p, q, alpha);
    return run_search(
        family, box, target,
        [&](const FamilySpec& spec) {
            check_family_admissible(spec, p, alpha);
            const RadialFunction u = sample_family(spec, grid);
            return hardy_ratio_1d(u, p, q, alpha, beta).ratio;
        },
        options);
}

SharpnessReport extremal_search_conjugate_1d(double p, double q, double alpha0,
                                             FamilyKind family, GridPtr grid,
                                             const SearchOptions& options) {
    if (!(alpha0 > p - 1.0)) {
        std::ostringstream os;
        os << "alpha0 > p-1 violated: alpha0 = " << alpha0;
        throw InadmissibleParamsError(os.str());
    }
    const double alpha = -alpha0 - 2.0 + 2.0 * p; // dual direct-side weight
    const double beta0 = q * (alpha0 + 1.0) / p - q - 1.0;
    const SearchBox box = family_box(family, p, q, alpha, *grid);
    check_family_admissible({family, box.init}, p, alpha);
    const double target = sharp_constant_1d(p, q, alpha);
    return run_search(
        family, box, target,
        [&](const FamilySpec& spec) {
            check_family_admissible(spec, p, alpha);
            const RadialFunction u = sample_family_mirrored(spec, grid);
            return conjugate_ratio_1d(u, p, q, alpha0, beta0).ratio;
        },
        options);
}

SharpnessReport extremal_search_group(const HardyParams& params, double Q,
                                      FamilyKind family, GridPtr grid,
                                      const SphereMeasure& sphere,
                                      const SearchOptions& options) {
    if (!admissible_hardy_group(params, Q)) {
        std::ostringstream os;
        os << "group admissibility violated: need alpha < Q(p-1) and the scaling "
              "relation (alpha = "
           << params.alpha << ", Q = " << Q << ")";
        throw InadmissibleParamsError(os.str());
    }
    const double alpha_eff = params.alpha + Q - 1.0; // rhs weight of the g-integral
    const SearchBox box = family_box(family, params.p, params.q, alpha_eff, *grid);
    check_family_admissible({family, box.init}, params.p, alpha_eff);
    const double target =
        sharp_constant_group(params.p, params.q, Q, params.alpha, sphere);
    return run_search(
        family, box, target,
        [&](const FamilySpec& spec) {
            check_family_admissible(spec, params.p, alpha_eff);
            const RadialFunction g = sample_family(spec, grid);
            return group_ratio_radial(g, params, Q, sphere).ratio;
        },
        options);
}

VerificationReport duality_check(double p, double q, double alpha, FamilyKind family,
                                 GridPtr grid, const SearchOptions& options) {
    const SharpnessReport direct = extremal_search_1d(p, q, alpha, family, grid, options);
    const ConjugateParams cj = conjugate_params_1d(p, alpha, q);
    const SharpnessReport conj =
        extremal_search_conjugate_1d(p, q, cj.alpha0, family, grid, options);

    const double target = direct.target_constant;
    VerificationReport rep;
    rep.check = "duality";
    rep.value = direct.best_ratio;
    rep.oracle = conj.best_ratio;
    rep.tolerance = 0.05 * target;
    rep.seed = options.seed;
    const bool targets_equal =
        std::abs(direct.target_constant - conj.target_constant) <= 1e-12 * target;
    rep.passed = targets_equal &&
                 std::abs(direct.best_ratio - conj.best_ratio) <= rep.tolerance;
    rep.details["target_constant"] = target;
    rep.details["conjugate_target_constant"] = conj.target_constant;
    rep.details["alpha0"] = cj.alpha0;
    rep.details["beta0"] = cj.beta0;
    rep.details["direct_attainment"] = direct.attainment;
    rep.details["conjugate_attainment"] = conj.attainment;
    rep.note = "direct-side vs conjugate-side best ratios share one sharp constant";
    return rep;
}

VerificationReport bracket_check(double p, double q, double Q, double alpha,
                                 const SphereMeasure& sphere) {
    const HardyParams params = HardyParams::make_balanced(p, q, alpha, Q);
    if (!admissible_hardy_group(params, Q)) {
        std::ostringstream os;
        os << "alpha < Q(p-1) violated: alpha = " << alpha << ", Q(p-1) = "
           << Q * (p - 1.0);
        throw InadmissibleParamsError(os.str());
    }
    const double C = sharp_constant_group(p, q, Q, alpha, sphere);
    const Bracket br = constant_bracket(p, q, Q, alpha, params.beta, sphere);

    // At p = q the sharp constant sits exactly on the upper endpoint.
    constexpr double rel = 1e-9;
    VerificationReport rep;
    rep.check = "bracket";
    rep.value = C;
    rep.oracle = 0.5 * (br.lower + br.upper);
    rep.tolerance = rel;
    rep.passed = C >= br.lower * (1.0 - rel) && C <= br.upper * (1.0 + rel);
    rep.details["lower"] = br.lower;
    rep.details["upper"] = br.upper;
    rep.details["beta"] = params.beta;
    rep.note = "sharp constant inside the two-sided non-sharp bracket";
    return rep;
}

} // namespace hardylab
