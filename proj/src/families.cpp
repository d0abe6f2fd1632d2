#include "hardylab/families.hpp"

#include "hardylab/errors.hpp"
#include "hardylab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hardylab {

const char* to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::power: return "power";
        case FamilyKind::truncated_power: return "truncated_power";
        case FamilyKind::bliss: return "bliss";
        case FamilyKind::indicator: return "indicator";
        case FamilyKind::gaussian: return "gaussian";
    }
    return "?";
}

bool family_kind_from_string(const std::string& s, FamilyKind& out) {
    if (s == "power") out = FamilyKind::power;
    else if (s == "truncated_power") out = FamilyKind::truncated_power;
    else if (s == "bliss") out = FamilyKind::bliss;
    else if (s == "indicator") out = FamilyKind::indicator;
    else if (s == "gaussian") out = FamilyKind::gaussian;
    else return false;
    return true;
}

std::vector<std::string> family_parameter_names(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::power: return {"s"};
        case FamilyKind::truncated_power: return {"s", "log10_eps", "log10_R"};
        case FamilyKind::bliss: return {"ln_c", "a", "b"};
        case FamilyKind::indicator: return {"log10_lo", "log10_hi"};
        case FamilyKind::gaussian: return {"log10_center", "width"};
    }
    return {};
}

namespace {

void require_arity(const FamilySpec& spec) {
    const auto names = family_parameter_names(spec.kind);
    if (spec.params.size() != names.size()) {
        std::ostringstream os;
        os << "family " << to_string(spec.kind) << " expects " << names.size()
           << " parameters, got " << spec.params.size();
        throw InvalidInputError(os.str());
    }
}

} // namespace

double family_value(const FamilySpec& spec, double t) {
    switch (spec.kind) {
        case FamilyKind::power:
            return std::pow(t, spec.params[0]);
        case FamilyKind::truncated_power: {
            const double eps = std::pow(10.0, spec.params[1]);
            const double R = std::pow(10.0, spec.params[2]);
            return (t >= eps && t <= R) ? std::pow(t, spec.params[0]) : 0.0;
        }
        case FamilyKind::bliss: {
            const double c = std::exp(spec.params[0]);
            return std::pow(1.0 + c * std::pow(t, spec.params[1]), -spec.params[2]);
        }
        case FamilyKind::indicator: {
            const double lo = std::pow(10.0, spec.params[0]);
            const double hi = std::pow(10.0, spec.params[1]);
            return (t >= lo && t <= hi) ? 1.0 : 0.0;
        }
        case FamilyKind::gaussian: {
            const double lc = spec.params[0] * std::log(10.0);
            const double z = (std::log(t) - lc) / spec.params[1];
            return std::exp(-z * z);
        }
    }
    return 0.0;
}

void check_family_admissible(const FamilySpec& spec, double p, double alpha) {
    require_arity(spec);
    switch (spec.kind) {
        case FamilyKind::bliss: {
            const double a = spec.params[1], b = spec.params[2];
            if (!(a > 0.0) || !(b > 0.0))
                throw InvalidInputError("bliss family needs a > 0 and b > 0");
            if (!(alpha > -1.0)) {
                std::ostringstream os;
                os << "bliss family: int u^p t^alpha dt diverges at 0 (alpha = " << alpha
                   << " <= -1)";
                throw InadmissibleFamilyError(os.str());
            }
            if (!(p * a * b - alpha > 1.0)) {
                std::ostringstream os;
                os << "bliss family: int u^p t^alpha dt diverges at infinity "
                      "(p*a*b - alpha = "
                   << p * a * b - alpha << " <= 1)";
                throw InadmissibleFamilyError(os.str());
            }
            break;
        }
        case FamilyKind::truncated_power:
        case FamilyKind::indicator:
            if (spec.params[spec.params.size() - 2] >= spec.params.back())
                throw InvalidInputError("family support: need lower cutoff < upper cutoff");
            break;
        case FamilyKind::gaussian:
            if (!(spec.params[1] > 0.0))
                throw InvalidInputError("gaussian family needs width > 0");
            break;
        case FamilyKind::power:
            break; // truncated by the grid itself
    }
}

RadialFunction sample_family(const FamilySpec& spec, GridPtr grid) {
    require_arity(spec);
    return RadialFunction::sample(std::move(grid),
                                  [&spec](double t) { return family_value(spec, t); });
}

RadialFunction sample_family_mirrored(const FamilySpec& spec, GridPtr grid) {
    require_arity(spec);
    return RadialFunction::sample(std::move(grid), [&spec](double t) {
        return family_value(spec, 1.0 / t) / (t * t);
    });
}

double PiecewisePower::value(double t) const {
    const double l = std::log10(t);
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        if (l >= breaks[j] && l < breaks[j + 1])
            return coeff[j] * std::pow(t, expo[j]);
    }
    return 0.0;
}

PiecewisePower random_piecewise_power(std::uint64_t seed) {
    CounterRng rng(seed);
    PiecewisePower f;
    const int k = 1 + static_cast<int>(rng.bits(0) % 4); // 1..4 pieces
    std::vector<double> bs;
    for (int j = 0; j <= k; ++j) bs.push_back(rng.uniform(1 + j, -4.0, 4.0));
    std::sort(bs.begin(), bs.end());
    f.breaks = bs;
    for (int j = 0; j < k; ++j) {
        f.coeff.push_back(std::exp(rng.uniform(100 + j, -1.0, 1.0)));
        f.expo.push_back(rng.uniform(200 + j, -1.2, 1.2));
    }
    return f;
}

RadialFunction sample_piecewise_power(const PiecewisePower& f, GridPtr grid) {
    return RadialFunction::sample(std::move(grid), [&f](double t) { return f.value(t); });
}

} // namespace hardylab
