#include "growfrag/pde.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "growfrag/errors.hpp"
#include "growfrag/quadrature.hpp"

namespace growfrag {

namespace {

// trapezoid of f_cell * y^{gamma-1} over [lo, hi]
inline double cell_trapezoid(double value, double lo, double hi, double gm1) {
    return value * 0.5 * (std::pow(lo, gm1) + std::pow(hi, gm1)) * (hi - lo);
}

}  // namespace

double fragmentation_gain(const ProblemParams& p, const GridFunction& f, double x) {
    if (!(x > 0.0)) throw InvalidDomain("fragmentation_gain: requires x > 0");
    const auto& grid = f.grid;
    const double gm1 = p.gamma - 1.0;
    if (x >= grid.x_max()) return 0.0;
    double acc = 0.0;
    for (std::size_t i = grid.cells(); i-- > 0;) {
        const double lo = grid.edges[i];
        const double hi = grid.edges[i + 1];
        if (hi <= x) break;
        acc += cell_trapezoid(f.values[i], std::max(lo, x), hi, gm1);
    }
    return p.theta * acc;
}

GridFunction solve_regular(const ProblemParams& p, double t0, double t1,
                           const RadialGrid& grid, double cfl) {
    if (!(cfl > 0.0) || cfl > 1.0) {
        throw CFLViolation("solve_regular: cfl must lie in (0, 1]");
    }
    if (!(t0 > 0.0) || !(t1 >= t0) || !(t1 < 1.0 / p.gamma)) {
        throw TimeOutOfRange("solve_regular: requires 0 < t0 <= t1 < 1/gamma");
    }
    if (front_position(p, t1) >= grid.x_max()) {
        throw DomainTooSmall("solve_regular: the front exits the grid before t1");
    }

    const std::size_t n = grid.cells();
    GridFunction result;
    result.grid = grid;
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.values[i] = regular_density(p, t0, grid.centers[i]);
    }
    if (t1 == t0) return result;

    std::vector<double> dx(n), edge_speed(n + 1), sink(n), gm1_edges(n + 1);
    const double gm1 = p.gamma - 1.0;
    for (std::size_t i = 0; i <= n; ++i) {
        edge_speed[i] = std::pow(grid.edges[i], p.gamma + 1.0);
        gm1_edges[i] = std::pow(grid.edges[i], gm1);
    }
    double dt_cfl = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        dx[i] = grid.width(i);
        sink[i] = std::pow(grid.centers[i], p.gamma);
        dt_cfl = std::min(dt_cfl, dx[i] / edge_speed[i + 1]);
    }
    dt_cfl *= cfl;

    std::vector<double>& u = result.values;
    std::vector<double> gain(n), suffix(n + 1);
    double t = t0;
    while (t < t1 - 1e-14 * t1) {
        const double dt = std::min(dt_cfl, t1 - t);
        const double gt = p.gamma * t;
        const double front = std::pow(1.0 - gt, -1.0 / p.gamma);
        const double source_amp = p.theta * std::pow(1.0 - gt, (2.0 - p.gamma) / p.gamma);

        // suffix[i] = sum over cells j >= i of the gain integrand
        suffix[n] = 0.0;
        for (std::size_t i = n; i-- > 0;) {
            suffix[i] = suffix[i + 1] +
                        cell_trapezoid(u[i], grid.edges[i], grid.edges[i + 1], gm1);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double upper = cell_trapezoid(u[i], grid.centers[i], grid.edges[i + 1], gm1);
            gain[i] = p.theta * (suffix[i + 1] + upper);
        }

        double flux_left = 0.0;  // zero inflow at x_min
        for (std::size_t i = 0; i < n; ++i) {
            const double flux_right = edge_speed[i + 1] * u[i];
            // exact cell average of H(front - x)
            const double covered =
                std::clamp((front - grid.edges[i]) / dx[i], 0.0, 1.0);
            const double unew = u[i] + dt * (-(flux_right - flux_left) / dx[i] -
                                             sink[i] * u[i] + source_amp * covered + gain[i]);
            flux_left = flux_right;
            u[i] = unew;
        }
        t += dt;
    }
    return result;
}

AtomComponent integrate_atom_ode(const ProblemParams& p, double t1, double dt) {
    if (t1 < 0.0 || !(t1 < 1.0 / p.gamma)) {
        throw TimeOutOfRange("integrate_atom_ode: t1 outside [0, 1/gamma)");
    }
    if (dt <= 0.0) dt = 1e-4 / p.gamma;
    const double g = p.gamma;
    double X = 1.0;
    double m = 1.0;
    double t = 0.0;
    // X' = X^{g+1}, m' = -X^g m
    const auto fX = [g](double x) { return std::pow(x, g + 1.0); };
    const auto fm = [g](double x, double mm) { return -std::pow(x, g) * mm; };
    while (t < t1 - 1e-15) {
        const double h = std::min(dt, t1 - t);
        const double k1x = fX(X), k1m = fm(X, m);
        const double k2x = fX(X + 0.5 * h * k1x), k2m = fm(X + 0.5 * h * k1x, m + 0.5 * h * k1m);
        const double k3x = fX(X + 0.5 * h * k2x), k3m = fm(X + 0.5 * h * k2x, m + 0.5 * h * k2m);
        const double k4x = fX(X + h * k3x), k4m = fm(X + h * k3x, m + h * k3m);
        X += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
        m += h / 6.0 * (k1m + 2.0 * k2m + 2.0 * k3m + k4m);
        t += h;
    }
    return AtomComponent{X, m};
}

namespace {

double bump(double u) {
    const double q = 1.0 - u * u;
    return q > 0.0 ? std::exp(1.0 - 1.0 / q) : 0.0;
}

double bump_derivative(double u) {
    const double q = 1.0 - u * u;
    if (q <= 0.0) return 0.0;
    return bump(u) * (-2.0 * u / (q * q));
}

}  // namespace

double BumpTestFunction::time_value(double t) const {
    return bump((t - t_center) / t_halfwidth);
}
double BumpTestFunction::time_derivative(double t) const {
    return bump_derivative((t - t_center) / t_halfwidth) / t_halfwidth;
}
double BumpTestFunction::space_value(double x) const {
    return bump((x - x_center) / x_halfwidth);
}
double BumpTestFunction::space_derivative(double x) const {
    return bump_derivative((x - x_center) / x_halfwidth) / x_halfwidth;
}

double weak_residual_for(const ProblemParams& p, const BumpTestFunction& phi,
                         int nodes_per_axis,
                         const std::function<AtomComponent(double)>& atom,
                         const std::function<double(double, double)>& density) {
    if (nodes_per_axis < 64) {
        throw InvalidParam("weak_residual: requires at least 64 nodes per axis");
    }
    const double t_lo = phi.t_center - phi.t_halfwidth;
    const double t_hi = phi.t_center + phi.t_halfwidth;
    const double x_lo = phi.x_center - phi.x_halfwidth;
    const double x_hi = phi.x_center + phi.x_halfwidth;
    if (!(t_lo > 0.0) || !(t_hi < 1.0 / p.gamma) || !(x_lo > 0.0)) {
        throw InvalidDomain("weak_residual: bump support must lie inside the open domain");
    }

    // antiderivative of the space bump from its lower support edge
    const auto space_primitive = [&](double x) {
        const double hi = std::min(x, x_hi);
        if (hi <= x_lo) return 0.0;
        return quadrature::integrate([&](double y) { return phi.space_value(y); }, x_lo, hi,
                                     1e-13, 1e-15);
    };

    const double g = p.gamma;
    const auto dual_weight = [&](double t, double x) {
        const double bt = phi.time_value(t);
        return -phi.time_derivative(t) * phi.space_value(x) -
               std::pow(x, g + 1.0) * bt * phi.space_derivative(x) +
               std::pow(x, g) * bt * phi.space_value(x) -
               p.theta * std::pow(x, g - 1.0) * bt * space_primitive(x);
    };

    std::vector<double> gl_nodes, gl_weights;
    quadrature::gauss_legendre(nodes_per_axis, gl_nodes, gl_weights);

    const auto integrate_x = [&](double t, double a, double b) {
        if (!(b > a)) return 0.0;
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double acc = 0.0;
        for (int i = 0; i < nodes_per_axis; ++i) {
            const double x = mid + half * gl_nodes[i];
            acc += gl_weights[i] * density(t, x) * dual_weight(t, x);
        }
        return half * acc;
    };

    double total = 0.0;
    const double t_mid = 0.5 * (t_lo + t_hi);
    const double t_half = 0.5 * (t_hi - t_lo);
    for (int j = 0; j < nodes_per_axis; ++j) {
        const double t = t_mid + t_half * gl_nodes[j];
        const AtomComponent a = atom(t);
        double slice = a.mass * dual_weight(t, a.location);
        const double front = front_position(p, t);
        // the integrand is supported on [x_lo, front]; split where its
        // character changes (top of the bump support)
        const double split = std::clamp(x_hi, x_lo, std::max(front, x_lo));
        slice += integrate_x(t, x_lo, split);
        slice += integrate_x(t, split, std::max(front, split));
        total += gl_weights[j] * t_half * slice;
    }
    return std::abs(total);
}

double weak_residual(const ProblemParams& p, const BumpTestFunction& phi, int nodes_per_axis) {
    return weak_residual_for(
        p, phi, nodes_per_axis, [&](double t) { return atom_state(p, t); },
        [&](double t, double x) { return regular_density(p, t, x); });
}

}  // namespace growfrag
