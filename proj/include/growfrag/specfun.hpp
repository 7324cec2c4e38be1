#ifndef GROWFRAG_SPECFUN_HPP
#define GROWFRAG_SPECFUN_HPP

#include <complex>

namespace growfrag {

using Complex = std::complex<double>;

// Complex-argument special functions. All functions are pure and
// thread-safe. Poles of Gamma are detected within an absolute distance
// of 1e-12 and reported as PoleError.
namespace specfun {

// Absolute tolerance for "is a non-positive integer" pole tests.
inline constexpr double kPoleTol = 1e-12;

// Principal branch of log Gamma(z). Lanczos approximation for
// Re z >= 0.5, reflection formula otherwise.
Complex log_gamma(Complex z);

// Gamma(z). exp(log_gamma) off the real axis, std::tgamma on it.
Complex gamma(Complex z);

// Digamma psi(z) via recurrence into the asymptotic region plus the
// Stirling-type series; reflection for Re z < 0.
Complex digamma(Complex z);

// Gauss hypergeometric function 2F1(a,b;c;z) for complex parameters and
// real z < 1.
//
// Evaluation routes:
//   * a or b a non-positive integer: terminating polynomial, any z < 1.
//   * z in [0, 0.9]: direct power series.
//   * z < 0: Pfaff transformation onto z/(z-1) in (0,1).
//   * z in (0.9, 1): linear connection formula in 1-z (DLMF 15.8.4);
//     when c-a-b is zero the logarithmic case DLMF 15.8.10 is used, and
//     when c-a-b is within 1e-3 of any other integer the formula is ill
//     conditioned and DegenerateConnectionError is thrown.
Complex hyp2f1(Complex a, Complex b, Complex c, double z);

// Direct-series switch point for hyp2f1.
inline constexpr double kSeriesSwitch = 0.9;

// true when z is within kPoleTol of 0, -1, -2, ...
bool near_nonpositive_integer(Complex z);

}  // namespace specfun
}  // namespace growfrag

#endif
