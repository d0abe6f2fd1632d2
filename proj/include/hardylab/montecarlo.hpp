#pragma once

#include "hardylab/group.hpp"
#include "hardylab/report.hpp"

#include <cstdint>
#include <functional>
#include <string>

namespace hardylab {

inline constexpr std::uint64_t kDefaultMcSamples = 1'000'000;

struct McEstimate {
    double value = 0.0;
    double stderr_ = 0.0;
};

enum class SphereMethod { analytic, monte_carlo };

const char* to_string(SphereMethod m);

// Total mass |S| of the surface measure on the unit quasi-sphere, i.e. the
// constant in the polar decomposition. Always Q * vol(B(0,1)); computed in
// closed form for the isotropic euclidean norm and by Monte Carlo otherwise.
struct SphereMeasure {
    double value = 0.0;
    double estimate_stderr = 0.0;
    SphereMethod method = SphereMethod::analytic;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
};

// Q = 1 embedding of the classical half-line inequality: |S| = 1. The group
// picture of R^1 with |x| = abs has the two-point sphere, |S| = 2; passing one
// or the other through the constant formulas selects the convention.
SphereMeasure half_line_sphere();

// Samples the faces of [-b, b]^N and throws GeometryConfigError if any face
// point has quasi-norm < 1, i.e. the unit ball leaks out of the box.
void verify_bounding_box(const GroupSpec& group, const QuasiNormSpec& norm,
                         std::uint64_t samples_per_face, std::uint64_t seed);

// Lebesgue measure of {x : |x| < R} by rejection sampling in the dilated
// bounding box; vol(R) = vol(1) * R^Q by the dilation scaling, so only the
// unit ball is ever sampled.
McEstimate ball_volume(const GroupSpec& group, const QuasiNormSpec& norm, double radius,
                       std::uint64_t samples, std::uint64_t seed);

SphereMeasure sphere_measure(const GroupSpec& group, const QuasiNormSpec& norm,
                             std::uint64_t samples, std::uint64_t seed);

// A radial profile g(r) with declared compact support [support_lo, support_hi];
// g must vanish outside.
struct RadialProfile {
    std::function<double(double)> value;
    double support_lo = 0.0;
    double support_hi = 1.0;
    std::string name;
};

// Compares the N-dimensional Monte Carlo of int g(|x|) dx against the polar
// form |S| * int_0^inf g(r) r^{Q-1} dr (1D quadrature); passes at 3 combined
// standard errors.
VerificationReport polar_consistency_check(const RadialProfile& profile,
                                           const GroupSpec& group,
                                           const QuasiNormSpec& norm,
                                           const SphereMeasure& sphere,
                                           std::uint64_t samples, std::uint64_t seed);

} // namespace hardylab
