#include "hardylab/grid.hpp"

#include "hardylab/errors.hpp"

#include <cmath>
#include <sstream>

namespace hardylab {

RadialGrid::RadialGrid(double r_min, double r_max, std::size_t n_nodes) {
    if (!(r_min > 0.0) || !(r_max > r_min) || !std::isfinite(r_max))
        throw InvalidInputError("RadialGrid: need 0 < r_min < r_max < inf");
    if (n_nodes < 2) throw InvalidInputError("RadialGrid: need at least 2 nodes");

    const double l0 = std::log(r_min);
    const double l1 = std::log(r_max);
    h_ = (l1 - l0) / static_cast<double>(n_nodes - 1);

    log_nodes_.resize(n_nodes);
    nodes_.resize(n_nodes);
    for (std::size_t i = 0; i < n_nodes; ++i) {
        log_nodes_[i] = l0 + h_ * static_cast<double>(i);
        nodes_[i] = std::exp(log_nodes_[i]);
    }
    // endpoints exact by construction
    log_nodes_.front() = l0;
    log_nodes_.back() = l1;
    nodes_.front() = r_min;
    nodes_.back() = r_max;
}

GridPtr RadialGrid::standard() {
    static const GridPtr g = std::make_shared<const RadialGrid>(1e-6, 1e6, std::size_t{1} << 14);
    return g;
}

GridPtr RadialGrid::make(double r_min, double r_max, std::size_t n_nodes) {
    return std::make_shared<const RadialGrid>(r_min, r_max, n_nodes);
}

RadialFunction RadialFunction::zeros(GridPtr grid) {
    RadialFunction f;
    f.values.assign(grid->size(), 0.0);
    f.grid = std::move(grid);
    return f;
}

RadialFunction RadialFunction::sample(GridPtr grid, const std::function<double(double)>& fn) {
    RadialFunction f;
    f.values.resize(grid->size());
    const auto& r = grid->nodes();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const double v = fn(r[i]);
        if (!std::isfinite(v)) {
            std::ostringstream os;
            os << "non-finite sample value at node " << i << " (r = " << r[i] << ")";
            throw NumericError(os.str());
        }
        f.values[i] = v;
    }
    f.grid = std::move(grid);
    return f;
}

} // namespace hardylab
