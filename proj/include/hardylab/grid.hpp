#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace hardylab {

// Log-uniform discretization of the truncated positive axis [r_min, r_max].
// Nodes are strictly increasing with constant spacing in log r; the endpoints
// are hit exactly. All 1D quadrature in the lab lives on such grids because
// power weights turn into smooth exponentials in the log variable.
class RadialGrid {
public:
    RadialGrid(double r_min, double r_max, std::size_t n_nodes);

    double r_min() const { return nodes_.front(); }
    double r_max() const { return nodes_.back(); }
    std::size_t size() const { return nodes_.size(); }
    double log_step() const { return h_; }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& log_nodes() const { return log_nodes_; }

    // default lab grid: [1e-6, 1e6], 2^14 nodes
    static std::shared_ptr<const RadialGrid> standard();
    static std::shared_ptr<const RadialGrid> make(double r_min, double r_max,
                                                  std::size_t n_nodes);

private:
    std::vector<double> nodes_;
    std::vector<double> log_nodes_;
    double h_ = 0.0;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

// Samples of a function of r at the grid nodes. Mass outside [r_min, r_max]
// does not exist as far as the quadrature is concerned; callers keep their
// test functions supported inside the grid.
struct RadialFunction {
    GridPtr grid;
    std::vector<double> values;

    static RadialFunction zeros(GridPtr grid);
    // Throws NumericError naming the node if f produces a non-finite value.
    static RadialFunction sample(GridPtr grid, const std::function<double(double)>& f);
};

} // namespace hardylab
