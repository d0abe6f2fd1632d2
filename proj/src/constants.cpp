#include "hardylab/constants.hpp"

#include "hardylab/errors.hpp"
#include "hardylab/params.hpp"

#include <cmath>
#include <sstream>

namespace hardylab {

namespace {

// log of the scale-free p < q block:
//   ln( A^{1/q} / B^{1/p} ),  A = (p/e) Beta(q/e, q(p-1)/e),
//                             B = (p/e) Beta(p/e, p(q-1)/e),  e = q - p.
double log_bliss_block(double p, double q) {
    const double e = q - p;
    const double lpref = std::log(p / e);
    const double lA = lpref + std::lgamma(q / e) + std::lgamma(q * (p - 1.0) / e) -
                      std::lgamma(p * q / e);
    const double lB = lpref + std::lgamma(p / e) + std::lgamma(p * (q - 1.0) / e) -
                      std::lgamma(p * q / e);
    return lA / q - lB / p;
}

void require_positive_gap(double gap, const char* condition) {
    if (!(gap > 0.0)) {
        std::ostringstream os;
        os << condition << " violated (margin " << gap << ")";
        throw InadmissibleParamsError(os.str());
    }
}

} // namespace

double sharp_constant_1d(double p, double q, double alpha) {
    if (!(p > 1.0) || !(q >= p))
        throw InvalidInputError("sharp_constant_1d: need 1 < p <= q");
    const double gap = p - 1.0 - alpha;
    require_positive_gap(gap, "alpha < p-1");
    if (q - p < kPEqualQThreshold) return p / gap;

    const double pc = conjugate_exponent(p);
    const double lfirst = (1.0 / pc + 1.0 / q) * std::log((p - 1.0) / gap);
    return std::exp(lfirst + log_bliss_block(p, q));
}

double sharp_constant_group(double p, double q, double Q, double alpha,
                            const SphereMeasure& sphere) {
    if (!(p > 1.0) || !(q >= p))
        throw InvalidInputError("sharp_constant_group: need 1 < p <= q");
    if (!(Q > 0.0)) throw InvalidInputError("sharp_constant_group: need Q > 0");
    if (!(sphere.value > 0.0))
        throw InvalidInputError("sharp_constant_group: |S| must be positive");
    const double gap = Q * (p - 1.0) - alpha;
    require_positive_gap(gap, "alpha < Q(p-1)");
    if (q - p < kPEqualQThreshold) return p * sphere.value / gap;

    const double pc = conjugate_exponent(p);
    const double l = (1.0 + 1.0 / q - 1.0 / p) * std::log(sphere.value) +
                     (1.0 / pc + 1.0 / q) * std::log((p - 1.0) / gap) +
                     log_bliss_block(p, q);
    return std::exp(l);
}

double sharp_constant_conjugate_group(double p, double q, double Q, double alpha,
                                      const SphereMeasure& sphere) {
    if (!(p > 1.0) || !(q >= p))
        throw InvalidInputError("sharp_constant_conjugate_group: need 1 < p <= q");
    if (!(Q > 0.0)) throw InvalidInputError("sharp_constant_conjugate_group: need Q > 0");
    if (!(sphere.value > 0.0))
        throw InvalidInputError("sharp_constant_conjugate_group: |S| must be positive");
    const double gap = alpha - Q * (p - 1.0);
    require_positive_gap(gap, "alpha > Q(p-1)");
    if (q - p < kPEqualQThreshold) return p * sphere.value / gap;

    const double pc = conjugate_exponent(p);
    const double l = (1.0 + 1.0 / q - 1.0 / p) * std::log(sphere.value) +
                     (1.0 / pc + 1.0 / q) * std::log((p - 1.0) / gap) +
                     log_bliss_block(p, q);
    return std::exp(l);
}

Bracket constant_bracket(double p, double q, double Q, double alpha, double beta,
                         const SphereMeasure& sphere) {
    const double pc = conjugate_exponent(p);
    const double bq = beta + Q;
    const double aw = alpha * (1.0 - pc) + Q; // = (Q(p-1)-alpha)/(p-1)
    if (bq == 0.0 || !(aw > 0.0))
        throw InadmissibleParamsError("bracket undefined: need beta+Q != 0 and alpha(1-p')+Q > 0");
    Bracket b;
    b.lower = std::pow(sphere.value, 1.0 / q + 1.0 / pc) /
              (std::pow(std::abs(bq), 1.0 / q) * std::pow(aw, 1.0 / pc));
    b.upper = std::pow(pc, 1.0 / pc) * std::pow(p, 1.0 / q) * b.lower;
    return b;
}

} // namespace hardylab
