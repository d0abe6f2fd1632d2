#include "hardylab/quadrature.hpp"

#include "hardylab/errors.hpp"

#include <cmath>
#include <sstream>

namespace hardylab {

namespace {

void require_finite(const RadialFunction& f, const char* what) {
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (!std::isfinite(f.values[i])) {
            std::ostringstream os;
            os << what << ": non-finite value at node " << i << " (r = "
               << f.grid->nodes()[i] << ")";
            throw NumericError(os.str());
        }
    }
}

} // namespace

double log_trapezoid(const RadialFunction& f) {
    require_finite(f, "log_trapezoid");
    const auto& r = f.grid->nodes();
    const double h = f.grid->log_step();
    const std::size_t n = r.size();
    double s = 0.5 * (f.values[0] * r[0] + f.values[n - 1] * r[n - 1]);
    for (std::size_t i = 1; i + 1 < n; ++i) s += f.values[i] * r[i];
    return h * s;
}

RadialFunction cumulative_integral(const RadialFunction& u) {
    require_finite(u, "cumulative_integral");
    const auto& r = u.grid->nodes();
    const double h = u.grid->log_step();
    RadialFunction out;
    out.grid = u.grid;
    out.values.resize(r.size());
    out.values[0] = 0.0;
    for (std::size_t i = 1; i < r.size(); ++i) {
        out.values[i] = out.values[i - 1] +
                        0.5 * h * (u.values[i - 1] * r[i - 1] + u.values[i] * r[i]);
    }
    return out;
}

RadialFunction tail_integral(const RadialFunction& u) {
    require_finite(u, "tail_integral");
    const auto& r = u.grid->nodes();
    const double h = u.grid->log_step();
    RadialFunction out;
    out.grid = u.grid;
    out.values.resize(r.size());
    const std::size_t n = r.size();
    out.values[n - 1] = 0.0;
    for (std::size_t i = n - 1; i-- > 0;) {
        out.values[i] = out.values[i + 1] +
                        0.5 * h * (u.values[i] * r[i] + u.values[i + 1] * r[i + 1]);
    }
    return out;
}

double weighted_lq_norm(const RadialFunction& f, double weight_exponent, double q) {
    if (!(q >= 1.0)) throw InvalidInputError("weighted_lq_norm: q must be >= 1");
    require_finite(f, "weighted_lq_norm");

    const auto& lr = f.grid->log_nodes();
    const double h = f.grid->log_step();
    const std::size_t n = lr.size();
    const double w1 = weight_exponent + 1.0; // x^w dx = e^{(w+1) s} ds

    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::abs(f.values[i]);
        if (a == 0.0) continue;
        double term = std::exp(q * std::log(a) + w1 * lr[i]);
        if (i == 0 || i == n - 1) term *= 0.5;
        s += term;
        if (!std::isfinite(s)) {
            std::ostringstream os;
            os << "weighted_lq_norm diverges near r = " << f.grid->nodes()[i]
               << " (weight exponent " << weight_exponent << ", q = " << q << ")";
            throw NumericError(os.str());
        }
    }
    return std::pow(h * s, 1.0 / q);
}

} // namespace hardylab
