#include "hardylab/operator_norm.hpp"

#include "hardylab/errors.hpp"
#include "hardylab/rng.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace hardylab {

double operator_norm_oracle(double alpha, const RadialGrid& grid,
                            const OperatorNormOptions& options) {
    if (!(alpha < 1.0))
        throw InadmissibleParamsError("operator_norm_oracle: need alpha < 1 (p = q = 2)");

    const std::size_t n = grid.size();
    const auto& r = grid.nodes();
    const double h = grid.log_step();
    const double beta = alpha - 2.0;

    std::vector<double> w(n), ra(n), rb(n);
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = h * r[i];
        ra[i] = std::pow(r[i], -alpha / 2.0);
        rb[i] = std::pow(r[i], beta / 2.0);
    }
    w[0] *= 0.5;
    w[n - 1] *= 0.5;

    // (Kv)_i = r_i^{beta/2} * trapezoid prefix of t^{-alpha/2} v(t)
    std::vector<double> g(n), c(n), m(n), A(n);
    auto applyK = [&](const std::vector<double>& v, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) g[i] = ra[i] * v[i] * r[i];
        c[0] = 0.0;
        for (std::size_t i = 1; i < n; ++i)
            c[i] = c[i - 1] + 0.5 * h * (g[i - 1] + g[i]);
        for (std::size_t i = 0; i < n; ++i) out[i] = rb[i] * c[i];
    };
    // adjoint in the weighted inner product <a,b>_w = sum w_i a_i b_i
    auto applyKt = [&](const std::vector<double>& z, std::vector<double>& out) {
        for (std::size_t i = 0; i < n; ++i) m[i] = w[i] * z[i] * rb[i];
        double suff = 0.0; // sum_{i > j} m_i
        A[n - 1] = h * r[n - 1] * 0.5 * m[n - 1];
        for (std::size_t j = n - 1; j-- > 0;) {
            suff += m[j + 1];
            A[j] = h * r[j] * (0.5 * m[j] + suff);
        }
        A[0] = h * r[0] * 0.5 * suff; // node 0 never contributes its own mass
        for (std::size_t i = 0; i < n; ++i) out[i] = ra[i] * A[i] / w[i];
    };

    auto dot_w = [&](const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += w[i] * a[i] * b[i];
        return s;
    };

    CounterRng rng(options.seed);
    std::vector<double> v(n), kv(n), y(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 0.1 + rng.uniform01(i);
    {
        const double nv = std::sqrt(dot_w(v, v));
        for (auto& x : v) x /= nv;
    }

    double lambda = 0.0;
    for (int it = 0; it < options.max_iters; ++it) {
        applyK(v, kv);
        applyKt(kv, y);
        const double lam = dot_w(v, y); // Rayleigh quotient of K*K
        const double ny = std::sqrt(dot_w(y, y));
        if (!(ny > 0.0)) throw NumericError("operator_norm_oracle: zero iterate");
        for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / ny;
        if (it > 2 && std::abs(lam - lambda) <= options.tol * lam)
            return std::sqrt(lam);
        lambda = lam;
    }
    std::ostringstream os;
    os << "operator_norm_oracle: no convergence after " << options.max_iters
       << " iterations (last value " << std::sqrt(lambda) << ")";
    throw ConvergenceError(os.str());
}

} // namespace hardylab
