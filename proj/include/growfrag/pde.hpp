#ifndef GROWFRAG_PDE_HPP
#define GROWFRAG_PDE_HPP

#include <functional>

#include "growfrag/closed_form.hpp"
#include "growfrag/grid.hpp"
#include "growfrag/model.hpp"

namespace growfrag {

// theta * int_x^inf f(y) y^{gamma-1} dy for a piecewise-constant grid
// function, per-cell trapezoid weights, accumulated from the top edge.
// Exactly zero beyond the grid support.
double fragmentation_gain(const ProblemParams& p, const GridFunction& f, double x);

// First-order upwind finite-volume evolution of the regular part from
// its closed-form state at t0 to t1, with the atom entering through the
// exact cell-average Heaviside source. Explicit Euler steps of size
// cfl * min_i(dx_i / edge_speed_i), edge_speed = x^{gamma+1}.
GridFunction solve_regular(const ProblemParams& p, double t0, double t1,
                           const RadialGrid& grid, double cfl);

// RK4 integration of the atom characteristic X' = X^{gamma+1},
// m' = -X^gamma m from (1, 1); matches atom_state to ~1e-8 relative at
// the default step.
AtomComponent integrate_atom_ode(const ProblemParams& p, double t1, double dt = 0.0);

// Separable C^1 (in fact C^infty) space-time bump test function,
// exp(1 - 1/(1-u^2)) in each scaled variable.
struct BumpTestFunction {
    double t_center = 0.0;
    double t_halfwidth = 0.0;
    double x_center = 0.0;
    double x_halfwidth = 0.0;

    double time_value(double t) const;
    double time_derivative(double t) const;
    double space_value(double x) const;
    double space_derivative(double x) const;
};

// |<u, -phi_t - x^{gamma+1} phi_x + x^gamma phi - theta x^{gamma-1} Phi>|
// where Phi(t,y) = int_0^y phi(t,x) dx, u the closed-form solution, by
// tensor-product Gauss-Legendre quadrature with nodes_per_axis points
// per axis (the x axis is split at the moving front). Zero up to
// quadrature error for the exact solution.
double weak_residual(const ProblemParams& p, const BumpTestFunction& phi, int nodes_per_axis);

// Same functional for an arbitrary measure (atom trajectory + density);
// lets tests substitute the zero measure or perturbed solutions.
double weak_residual_for(const ProblemParams& p, const BumpTestFunction& phi,
                         int nodes_per_axis,
                         const std::function<AtomComponent(double)>& atom,
                         const std::function<double(double, double)>& density);

}  // namespace growfrag

#endif
