#ifndef GROWFRAG_GRID_HPP
#define GROWFRAG_GRID_HPP

#include <cstddef>
#include <vector>

namespace growfrag {

enum class GridSpacing { kLogUniform, kUniform };

// Cell-centered 1-D grid on a positive interval. Edges are strictly
// increasing; centers lie inside their cells (geometric means for
// log-uniform spacing, midpoints otherwise).
struct RadialGrid {
    std::vector<double> edges;    // size cells + 1
    std::vector<double> centers;  // size cells
    GridSpacing spacing = GridSpacing::kLogUniform;

    static RadialGrid log_uniform(double x_min, double x_max, std::size_t cells);
    static RadialGrid uniform(double x_min, double x_max, std::size_t cells);

    std::size_t cells() const { return centers.size(); }
    double width(std::size_t i) const { return edges[i + 1] - edges[i]; }
    double x_min() const { return edges.front(); }
    double x_max() const { return edges.back(); }
};

// Real values attached to the cells of a grid, in density units.
struct GridFunction {
    RadialGrid grid;
    std::vector<double> values;  // size grid.cells()
};

}  // namespace growfrag

#endif
