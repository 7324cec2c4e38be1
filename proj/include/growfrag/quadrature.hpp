#ifndef GROWFRAG_QUADRATURE_HPP
#define GROWFRAG_QUADRATURE_HPP

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "growfrag/errors.hpp"

namespace growfrag::quadrature {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15 constants),
// positive half of the symmetric rule.
inline constexpr double kK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000,
};
inline constexpr double kK15Weights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
inline constexpr double kG7Weights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

template <typename F>
auto gauss_kronrod_panel(F&& f, double a, double b, double& err) {
    using R = decltype(f(0.5 * (a + b)));
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    R kronrod{};
    R gauss{};
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kK15Nodes[i];
        R v = (i == 7) ? f(mid) : R(f(mid - dx) + f(mid + dx));
        kronrod += kK15Weights[i] * v;
        if (i % 2 == 1) gauss += kG7Weights[i / 2] * v;
    }
    kronrod *= half;
    gauss *= half;
    err = std::abs(kronrod - gauss);
    return kronrod;
}

// Adaptive bisection on [a, b]; accepts a panel once its Kronrod/Gauss
// discrepancy is below max(abs_tol, rel_tol * |total|) scaled by the
// panel fraction of the interval.
template <typename F>
auto integrate(F&& f, double a, double b, double rel_tol = 1e-12, double abs_tol = 0.0,
               int max_panels = 200000) {
    using R = decltype(f(0.5 * (a + b)));
    struct Panel {
        double a, b;
        R value;
        double err;
    };
    double err0 = 0.0;
    R first = gauss_kronrod_panel(f, a, b, err0);
    std::vector<Panel> stack{{a, b, first, err0}};
    R total{};
    double used = 0.0;
    int panels = 1;
    const double span = b - a;
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double scale = std::max(std::abs(total + p.value), used);
        const double budget =
            std::max(abs_tol, rel_tol * scale) * std::max((p.b - p.a) / span, 1e-6);
        if (p.err <= budget || (p.b - p.a) < 1e-15 * (std::abs(p.a) + std::abs(p.b))) {
            total += p.value;
            used = std::max(used, std::abs(total));
            continue;
        }
        if (panels >= max_panels) {
            throw QuadratureFailure("integrate: panel budget exhausted before tolerance");
        }
        const double mid = 0.5 * (p.a + p.b);
        double e1 = 0.0;
        double e2 = 0.0;
        R v1 = gauss_kronrod_panel(f, p.a, mid, e1);
        R v2 = gauss_kronrod_panel(f, mid, p.b, e2);
        stack.push_back({p.a, mid, v1, e1});
        stack.push_back({mid, p.b, v2, e2});
        panels += 2;
    }
    return total;
}

// Adaptive integration over (0, b] for integrands with an integrable
// algebraic singularity at 0: geometric panels toward the origin, each
// integrated adaptively, summed from the smallest panel up.
template <typename F>
auto integrate_to_origin(F&& f, double b, double rel_tol = 1e-12, double cutoff = 1e-18) {
    using R = decltype(f(0.5 * b));
    std::vector<std::pair<double, double>> panels;
    double hi = b;
    while (hi > cutoff * b) {
        const double lo = hi * 0.25;
        panels.emplace_back(lo, hi);
        hi = lo;
    }
    R total{};
    for (auto it = panels.rbegin(); it != panels.rend(); ++it) {
        total += integrate(f, it->first, it->second, rel_tol, 0.0);
    }
    return total;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace growfrag::quadrature

#endif
