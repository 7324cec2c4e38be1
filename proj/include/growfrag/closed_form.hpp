#ifndef GROWFRAG_CLOSED_FORM_HPP
#define GROWFRAG_CLOSED_FORM_HPP

#include "growfrag/grid.hpp"
#include "growfrag/model.hpp"

namespace growfrag {

// Dirac component of the solution: a point mass riding the growth
// characteristic through x = 1.
struct AtomComponent {
    double location = 1.0;  // (1 - gamma t)^{-1/gamma}
    double mass = 1.0;      // (1 - gamma t)^{1/gamma}
};

// The solution at a fixed time: atom plus the regular density sampled
// on a grid.
struct SolutionSnapshot {
    ProblemParams params;
    double t = 0.0;
    AtomComponent atom;
    GridFunction regular;
};

// Finite blow-up horizon 1/gamma.
double blowup_time(const ProblemParams& p);

// Moving support boundary (1 - gamma t)^{-1/gamma}; coincides with the
// atom location.
double front_position(const ProblemParams& p, double t);

// Atom location and mass at time t in [0, 1/gamma).
AtomComponent atom_state(const ProblemParams& p, double t);

// Absolutely continuous part of the solution at (t, x), t in
// (0, 1/gamma). Zero beyond the front; at the front exactly, the
// interior limit theta t (1-gamma t)^{2/gamma} is returned.
double regular_density(const ProblemParams& p, double t, double x);

// Mellin transform of the solution, hypergeometric in gamma t.
Complex solution_mellin(const ProblemParams& p, double t, Complex s);

// Same transform through the Euler transformation; agrees with
// solution_mellin to ~1e-10 and is kept as an independent route.
Complex solution_mellin_euler(const ProblemParams& p, double t, Complex s);

// Mellin image of the atom alone: mass * location^{s-1}
// = (1 - gamma t)^{(2-s)/gamma}.
Complex atom_mellin(const ProblemParams& p, double t, Complex s);

// Moment of order r (r > -1): the transform at s = r + 1. Real-valued;
// the imaginary residue of the evaluation is below 1e-12.
double moment(const ProblemParams& p, double t, double r);

// Moment probe at complex order; complex_moment(p, t, sigma1 - 1) = 1
// for all t (conserved complex moments at the cumulant roots).
Complex complex_moment(const ProblemParams& p, double t, Complex r);

// Limit constant of the moment blow-up as gamma t -> 1:
//   r > 1     : Gamma((r+1)/g) Gamma((r-1)/g)
//               / (Gamma((r+1-sigma1)/g) Gamma((r+1-sigma2)/g))
//   r = 1     : Gamma(2/g) / (Gamma(sigma1/g) Gamma(sigma2/g)),
//               the rate of the logarithmic divergence of the first
//               moment (see README on the r = 1 reading)
//   0 < r < 1 : Gamma((r+1)/g) Gamma((1-r)/g)
//               / (Gamma(sigma1/g) Gamma(sigma2/g))
double blowup_constant(const ProblemParams& p, double r);

// moment(t, r) multiplied by the scaling that makes it converge to
// blowup_constant(r): (1-gamma t)^{(r-1)/gamma} for r > 1,
// -1/log(1-gamma t) for r = 1, none for r in (0,1).
double scaled_moment(const ProblemParams& p, double t, double r);

// Pointwise limit profile of the regular density as gamma t -> 1:
// gamma Gamma(2/g)/(Gamma(sigma1/g) Gamma(sigma2/g)) (1+x^g)^{-2/g}.
double limit_profile(const ProblemParams& p, double x);

// Samples the regular density at the grid centers and packages the
// snapshot.
SolutionSnapshot make_snapshot(const ProblemParams& p, double t, const RadialGrid& grid);

}  // namespace growfrag

#endif
