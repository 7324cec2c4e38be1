#ifndef GROWFRAG_MELLIN_HPP
#define GROWFRAG_MELLIN_HPP

#include "growfrag/closed_form.hpp"

namespace growfrag {

// Truncated vertical inversion contour Re s = s0, |Im s| <= height,
// sampled at `nodes` equispaced points (trapezoid rule).
struct ContourSpec {
    double s0 = 1.0;
    double height = 400.0;
    int nodes = 20001;
};

// Throws InvalidParam unless s0 > 0, height > 0, nodes >= 16.
void validate(const ContourSpec& contour);

// Forward transform of a snapshot: the atom contributes
// mass * location^{s-1} exactly, the regular part by adaptive
// quadrature of x^{s-1} u(t,x) over (0, front].
Complex snapshot_mellin(const SolutionSnapshot& snap, Complex s);

// Pointwise inverse transform of the regular part on a truncated
// contour. The atom image is removed analytically before quadrature,
// and the slowly decaying theta*t/s head of the hypergeometric factor
// is inverted in closed form (a Heaviside step at the front); the
// remaining integrand decays like (1+|s|)^{-2}, so the truncation tail
// is O(1/height). Throws ContourTooShort when the estimated tail
// exceeds tol. x must stay 1e-6 away from the front.
double inverse_mellin_regular(const ProblemParams& p, double t, double x,
                              const ContourSpec& contour, double tol = 1e-4);

// Residual of the Mellin evolution identity
//   d/dt M(t,s) = cumulant(s) * M(t, s+gamma)
// with a central difference in t; O(dt^2) for smooth M.
double evolution_residual(const ProblemParams& p, double t, Complex s, double dt);

// Closed form of int_0^front (1 + (gamma t - 1) x^gamma)^n x^{s-1} dx
//   = (1-gamma t)^{-s/gamma} Gamma(n+1) Gamma(s/g) / (g Gamma(1+s/g+n)).
Complex beta_moment_integral(const ProblemParams& p, double t, int n, Complex s);

// Same integral by adaptive quadrature; independent cross-check route.
Complex beta_moment_quadrature(const ProblemParams& p, double t, int n, Complex s,
                               double rel_tol = 1e-11);

// Mellin transform of the unit-amplitude regular profile
// v = u_regular / (theta t (1-gamma t)^{2/gamma}):
//   (1-gamma t)^{-s/gamma} (F(sigma1/g, sigma2/g; s/g; gamma t) - 1) / (theta t).
// Reassembly: atom_mellin + theta t (1-gt)^{2/g} * this = solution_mellin.
Complex normalized_profile_mellin(const ProblemParams& p, double t, Complex s);

}  // namespace growfrag

#endif
