#include "growfrag/grid.hpp"

#include <cmath>

#include "growfrag/errors.hpp"

namespace growfrag {

namespace {

void check_bounds(double x_min, double x_max, std::size_t cells) {
    if (!(x_min > 0.0) || !(x_max > x_min)) {
        throw InvalidParam("RadialGrid: requires 0 < x_min < x_max");
    }
    if (cells < 1) {
        throw InvalidParam("RadialGrid: requires at least one cell");
    }
}

}  // namespace

RadialGrid RadialGrid::log_uniform(double x_min, double x_max, std::size_t cells) {
    check_bounds(x_min, x_max, cells);
    RadialGrid g;
    g.spacing = GridSpacing::kLogUniform;
    g.edges.resize(cells + 1);
    const double l0 = std::log(x_min);
    const double l1 = std::log(x_max);
    for (std::size_t i = 0; i <= cells; ++i) {
        g.edges[i] = std::exp(l0 + (l1 - l0) * static_cast<double>(i) / cells);
    }
    g.edges.front() = x_min;
    g.edges.back() = x_max;
    g.centers.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        g.centers[i] = std::sqrt(g.edges[i] * g.edges[i + 1]);
    }
    return g;
}

RadialGrid RadialGrid::uniform(double x_min, double x_max, std::size_t cells) {
    check_bounds(x_min, x_max, cells);
    RadialGrid g;
    g.spacing = GridSpacing::kUniform;
    g.edges.resize(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i) {
        g.edges[i] = x_min + (x_max - x_min) * static_cast<double>(i) / cells;
    }
    g.edges.back() = x_max;
    g.centers.resize(cells);
    for (std::size_t i = 0; i < cells; ++i) {
        g.centers[i] = 0.5 * (g.edges[i] + g.edges[i + 1]);
    }
    return g;
}

}  // namespace growfrag
