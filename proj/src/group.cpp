#include "hardylab/group.hpp"

#include "hardylab/errors.hpp"

#include <cmath>
#include <sstream>

namespace hardylab {

GroupSpec GroupSpec::isotropic(std::size_t n) {
    if (n < 1) throw InvalidInputError("group dimension must be >= 1");
    GroupSpec g;
    g.dilation_exponents.assign(n, 1.0);
    g.Q = static_cast<double>(n);
    return g;
}

GroupSpec GroupSpec::anisotropic(std::vector<double> v) {
    if (v.empty()) throw InvalidInputError("group dimension must be >= 1");
    double q = 0.0;
    for (double e : v) {
        if (!(e > 0.0) || !std::isfinite(e))
            throw InvalidInputError("dilation exponents must be strictly positive");
        q += e;
    }
    GroupSpec g;
    g.dilation_exponents = std::move(v);
    g.Q = q;
    return g;
}

GroupSpec GroupSpec::heisenberg1() { return anisotropic({1.0, 1.0, 2.0}); }

const char* to_string(QuasiNormKind kind) {
    switch (kind) {
        case QuasiNormKind::euclidean_isotropic: return "euclid";
        case QuasiNormKind::anisotropic_sup: return "sup";
        case QuasiNormKind::koranyi_h1: return "koranyi";
    }
    return "?";
}

namespace {

bool is_isotropic(const GroupSpec& g) {
    for (double v : g.dilation_exponents)
        if (v != 1.0) return false;
    return true;
}

bool is_heisenberg1(const GroupSpec& g) {
    return g.dim() == 3 && g.dilation_exponents[0] == 1.0 &&
           g.dilation_exponents[1] == 1.0 && g.dilation_exponents[2] == 2.0;
}

double norm_euclid(std::span<const double> x) {
    double s = 0.0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
}

double norm_koranyi(std::span<const double> x) {
    const double rho2 = x[0] * x[0] + x[1] * x[1];
    return std::sqrt(std::sqrt(rho2 * rho2 + x[2] * x[2]));
}

} // namespace

void validate_norm(const GroupSpec& group, const QuasiNormSpec& norm) {
    if (!(norm.bounding_radius > 0.0))
        throw InvalidInputError("bounding_radius must be positive");
    switch (norm.kind) {
        case QuasiNormKind::euclidean_isotropic:
            if (!is_isotropic(group))
                throw IncompatibleSpecError(
                    "euclidean_isotropic norm requires isotropic dilation exponents (all 1)");
            break;
        case QuasiNormKind::anisotropic_sup:
            break;
        case QuasiNormKind::koranyi_h1:
            if (!is_heisenberg1(group))
                throw IncompatibleSpecError(
                    "koranyi_h1 norm requires dilation exponents (1,1,2)");
            break;
    }
}

double quasi_norm(std::span<const double> point, const QuasiNormSpec& norm,
                  const GroupSpec& group) {
    if (point.size() != group.dim()) {
        std::ostringstream os;
        os << "point dimension " << point.size() << " does not match group dimension "
           << group.dim();
        throw InvalidInputError(os.str());
    }
    validate_norm(group, norm);
    switch (norm.kind) {
        case QuasiNormKind::euclidean_isotropic:
            return norm_euclid(point);
        case QuasiNormKind::koranyi_h1:
            return norm_koranyi(point);
        case QuasiNormKind::anisotropic_sup: {
            double m = 0.0;
            for (std::size_t i = 0; i < point.size(); ++i) {
                const double v = group.dilation_exponents[i];
                const double a = std::abs(point[i]);
                const double c = (v == 1.0) ? a : std::pow(a, 1.0 / v);
                if (c > m) m = c;
            }
            return m;
        }
    }
    return 0.0;
}

std::function<double(std::span<const double>)>
make_norm_evaluator(const GroupSpec& group, const QuasiNormSpec& norm) {
    validate_norm(group, norm);
    switch (norm.kind) {
        case QuasiNormKind::euclidean_isotropic:
            return [](std::span<const double> x) { return norm_euclid(x); };
        case QuasiNormKind::koranyi_h1:
            return [](std::span<const double> x) { return norm_koranyi(x); };
        case QuasiNormKind::anisotropic_sup: {
            std::vector<double> inv;
            inv.reserve(group.dim());
            for (double v : group.dilation_exponents) inv.push_back(1.0 / v);
            return [inv](std::span<const double> x) {
                double m = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) {
                    const double c = (inv[i] == 1.0) ? std::abs(x[i])
                                                     : std::pow(std::abs(x[i]), inv[i]);
                    if (c > m) m = c;
                }
                return m;
            };
        }
    }
    throw InvalidInputError("unknown norm kind");
}

void dilate_into(std::span<const double> point, double lambda,
                 const GroupSpec& group, std::span<double> out) {
    if (point.size() != group.dim() || out.size() != group.dim())
        throw InvalidInputError("dilate: dimension mismatch");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw InvalidInputError("dilate: lambda must be positive");
    for (std::size_t i = 0; i < point.size(); ++i) {
        const double v = group.dilation_exponents[i];
        const double f = (v == 1.0) ? lambda : std::pow(lambda, v);
        out[i] = f * point[i];
    }
}

std::vector<double> dilate(std::span<const double> point, double lambda,
                           const GroupSpec& group) {
    std::vector<double> out(point.size());
    dilate_into(point, lambda, group, out);
    return out;
}

} // namespace hardylab
