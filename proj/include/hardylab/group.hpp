#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace hardylab {

// Homogeneous group structure on R^N: anisotropic dilations
//   D_lambda(x) = (lambda^{v_1} x_1, ..., lambda^{v_N} x_N),  v_i > 0.
// The homogeneous dimension Q = v_1 + ... + v_N governs how Lebesgue measure
// scales: |D_lambda(w)| = lambda^Q |w|.
struct GroupSpec {
    std::vector<double> dilation_exponents;
    double Q = 0.0;

    static GroupSpec isotropic(std::size_t n);               // v_i = 1, Q = n
    static GroupSpec anisotropic(std::vector<double> v);
    static GroupSpec heisenberg1();                           // (1, 1, 2), Q = 4

    std::size_t dim() const { return dilation_exponents.size(); }
};

enum class QuasiNormKind {
    euclidean_isotropic,   // sqrt(sum x_i^2); requires v_i = 1 for all i
    anisotropic_sup,       // max_i |x_i|^{1/v_i}
    koranyi_h1,            // ((x1^2+x2^2)^2 + x3^2)^{1/4}; requires v = (1,1,2)
};

const char* to_string(QuasiNormKind kind);

// A named quasi-norm together with a verified coordinate box: the unit
// quasi-ball is contained in [-b, b]^N with b = bounding_radius. All three
// shipped norms have b = 1 (checked by rejection tests in the Monte Carlo
// layer before sampling).
struct QuasiNormSpec {
    QuasiNormKind kind = QuasiNormKind::euclidean_isotropic;
    double bounding_radius = 1.0;
};

// Throws IncompatibleSpecError when the norm cannot represent a quasi-norm on
// the group (euclidean on anisotropic exponents is not 1-homogeneous;
// koranyi_h1 needs exponents (1,1,2)).
void validate_norm(const GroupSpec& group, const QuasiNormSpec& norm);

// |x| satisfying the quasi-norm axioms: |x| >= 0 with equality iff x = 0,
// |(-x)| = |x|, and |D_lambda x| = lambda |x|.
double quasi_norm(std::span<const double> point, const QuasiNormSpec& norm,
                  const GroupSpec& group);

// Validates once and returns an unchecked evaluator for hot loops.
std::function<double(std::span<const double>)>
make_norm_evaluator(const GroupSpec& group, const QuasiNormSpec& norm);

std::vector<double> dilate(std::span<const double> point, double lambda,
                           const GroupSpec& group);

void dilate_into(std::span<const double> point, double lambda,
                 const GroupSpec& group, std::span<double> out);

} // namespace hardylab
