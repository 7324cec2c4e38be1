#ifndef GROWFRAG_MODEL_HPP
#define GROWFRAG_MODEL_HPP

#include "growfrag/specfun.hpp"

namespace growfrag {

// Growth exponent, kernel height and the two roots of the cumulant.
// Immutable after construction through make_params.
struct ProblemParams {
    double gamma = 0.0;  // growth exponent, > 0
    double theta = 0.0;  // kernel height, > 0, != 1
    Complex sigma1;      // 1 - sqrt(1 - theta); Im sigma1 < 0 for theta > 1
    Complex sigma2;      // 1 + sqrt(1 - theta) = conj(sigma1) for theta > 1
};

// Validates gamma > 0, theta > 0 and |theta - 1| >= 1e-12 and computes
// the roots. sigma1 + sigma2 = 2 and sigma1*sigma2 = theta by
// construction (Vieta on the numerator of the cumulant).
ProblemParams make_params(double gamma, double theta);

// Fragment-size kernel theta * H(1 - x), with value 0 at x = 1 (the
// choice at the single point is measure-theoretically irrelevant).
double kernel(const ProblemParams& p, double x);

// Closed form of the kernel second moment over [1/2, 1): theta / 24.
double kernel_second_moment(const ProblemParams& p);

// Mellin image of the kernel: theta / s on Re s > 0.
Complex kernel_mellin(const ProblemParams& p, Complex s);

// Cumulant-type symbol K(s) + s - 2 on Re s > 0.
Complex cumulant(const ProblemParams& p, Complex s);

// Same symbol in factored form (s - sigma1)(s - sigma2) / s.
Complex cumulant_factored(const ProblemParams& p, Complex s);

struct CumulantInfimum {
    double value = 0.0;      // inf of the cumulant over s > 0
    double minimizer = 0.0;  // attained at sqrt(theta)
    // True when the infimum is negative, i.e. the sufficient condition
    // for global existence of the general theory holds.
    bool existence_condition_holds = false;
};

// Grid scan over (1e-3, 10 sqrt(theta)] followed by golden-section
// refinement. Defined for every valid parameter set.
CumulantInfimum cumulant_infimum(const ProblemParams& p);

// The positive infimum 2(sqrt(theta) - 1) for theta > 1; InvalidParam
// when theta <= 1 (the infimum is then not positive).
double cumulant_infimum_positive(const ProblemParams& p);

}  // namespace growfrag

#endif
