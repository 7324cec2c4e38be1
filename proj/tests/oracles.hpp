#ifndef GROWFRAG_TESTS_ORACLES_HPP
#define GROWFRAG_TESTS_ORACLES_HPP

// Test-only reference implementations, independent of the library's
// evaluation paths (Stirling series instead of Lanczos, log-space
// Gamma-ratio terms instead of the term recurrence).

#include <cmath>
#include <complex>

namespace oracles {

using Complex = std::complex<double>;

// log Gamma by recurrence into |z| >= 30 plus the Stirling series.
inline Complex stirling_log_gamma(Complex z) {
    Complex shift = 0.0;
    while (z.real() < 30.0) {
        shift -= std::log(z);
        z += 1.0;
    }
    static const double kB[5] = {1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
                                 1.0 / 1188.0};
    Complex series = 0.0;
    Complex zp = z;
    for (double c : kB) {
        series += c / zp;
        zp *= z * z;
    }
    return shift + (z - 0.5) * std::log(z) - z + 0.91893853320467274178 + series;
}

inline Complex stirling_gamma(Complex z) { return std::exp(stirling_log_gamma(z)); }

// 2F1 partial sum with every term built from log-Gamma ratios
// (the series written with explicit Gamma quotients), summed until the
// terms fall below 1e-18 of the partial sum.
inline Complex reference_2f1(Complex a, Complex b, Complex c, double z) {
    Complex sum = 0.0;
    const Complex base = stirling_log_gamma(c) - stirling_log_gamma(a) - stirling_log_gamma(b);
    for (int n = 0; n < 20000; ++n) {
        const double nd = n;
        const Complex lg = stirling_log_gamma(a + nd) + stirling_log_gamma(b + nd) -
                           stirling_log_gamma(c + nd) - std::lgamma(nd + 1.0) + base +
                           nd * std::log(std::abs(z));
        Complex term = std::exp(lg);
        if (z < 0.0 && n % 2 == 1) term = -term;
        sum += term;
        if (n > 3 && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

}  // namespace oracles

#endif
