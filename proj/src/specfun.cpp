#include "growfrag/specfun.hpp"

#include <cmath>
#include <cstdlib>

#include "growfrag/errors.hpp"

namespace growfrag::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLogPi = 1.14472988584940017414;
constexpr double kHalfLog2Pi = 0.91893853320467274178;
constexpr double kEulerGamma = 0.57721566490153286061;
constexpr int kMaxTerms = 100000;

// Lanczos approximation, g = 7, 9 coefficients. Relative accuracy of
// exp(log_gamma) is ~1e-14 on Re z >= 0.5 for |z| <= 50.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

Complex lanczos_log_gamma(Complex z) {
    // valid for Re z >= 0.5
    Complex sum = kLanczos[0];
    for (int k = 1; k < 9; ++k) {
        sum += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
    }
    const Complex t = z + 6.5;  // z + g - 0.5
    return kHalfLog2Pi + (z - 0.5) * std::log(t) - t + std::log(sum);
}

// log(sin(pi z)) up to a multiple of 2*pi*i; exp-consistent. The direct
// formula overflows for large |Im z|, where sin(pi z) is dominated by a
// single exponential.
Complex log_sin_pi(Complex z) {
    if (std::abs(z.imag()) < 20.0) {
        return std::log(std::sin(kPi * z));
    }
    const Complex ipiz = Complex(0.0, kPi) * z;
    if (z.imag() > 0.0) {
        // sin(pi z) ~ (i/2) exp(-i pi z)
        return -ipiz + Complex(-std::log(2.0), kPi / 2.0);
    }
    // sin(pi z) ~ (-i/2) exp(i pi z)
    return ipiz + Complex(-std::log(2.0), -kPi / 2.0);
}

void check_pole(Complex z, const char* who) {
    if (near_nonpositive_integer(z)) {
        throw PoleError(std::string(who) + ": argument within 1e-12 of a non-positive integer");
    }
}

}  // namespace

bool near_nonpositive_integer(Complex z) {
    if (std::abs(z.imag()) > kPoleTol) return false;
    if (z.real() > 0.5) return false;
    const double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= kPoleTol;
}

Complex log_gamma(Complex z) {
    check_pole(z, "log_gamma");
    if (z.real() >= 0.5) {
        return lanczos_log_gamma(z);
    }
    // reflection: log Gamma(z) = log(pi/sin(pi z)) - log Gamma(1-z)
    return kLogPi - log_sin_pi(z) - lanczos_log_gamma(1.0 - z);
}

Complex gamma(Complex z) {
    check_pole(z, "gamma");
    Complex g;
    if (z.imag() == 0.0) {
        g = Complex(std::tgamma(z.real()), 0.0);
    } else {
        g = std::exp(log_gamma(z));
    }
    if (!std::isfinite(g.real()) || !std::isfinite(g.imag())) {
        throw InvalidDomain("gamma: result overflows double precision");
    }
    return g;
}

Complex digamma(Complex z) {
    check_pole(z, "digamma");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi/tan(pi z)
        Complex cot;
        if (std::abs(z.imag()) > 100.0) {
            cot = Complex(0.0, z.imag() > 0.0 ? -kPi : kPi);
        } else {
            cot = kPi / std::tan(kPi * z);
        }
        return digamma(1.0 - z) - cot;
    }
    Complex acc = 0.0;
    while (z.real() < 10.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // Stirling series: psi(z) ~ ln z - 1/(2z) - sum B_{2n}/(2n z^{2n})
    static constexpr double kB[7] = {
        1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,      -1.0 / 240.0,
        1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
    };
    const Complex u = 1.0 / (z * z);
    Complex tail = 0.0;
    Complex up = u;
    for (double coeff : kB) {
        tail += coeff * up;
        up *= u;
    }
    return acc + std::log(z) - 0.5 / z - tail;
}

namespace {

// Direct power series, valid for |z| < 1; the caller keeps z away from
// the slowly convergent neighbourhood of 1.
Complex series_2f1(Complex a, Complex b, Complex c, double z) {
    check_pole(c, "hyp2f1");
    Complex term = 1.0;
    Complex sum = 1.0;
    int settled = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double nd = static_cast<double>(n);
        // (a+n)(b+n) is evaluated as one product so that exact conjugate
        // parameter pairs yield an exactly real factor.
        const Complex num = (a + nd) * (b + nd);
        const Complex den = (c + nd) * (nd + 1.0);
        term *= num / den * z;
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++settled == 3) return sum;
        } else {
            settled = 0;
        }
    }
    throw NonConvergenceError("hyp2f1: series exceeded 100000 terms");
}

// Terminating polynomial; `a` is within kPoleTol of the non-positive
// integer -m. Valid for every real z.
Complex terminating_2f1(Complex a, Complex b, Complex c, double z) {
    const int m = static_cast<int>(std::llround(-a.real()));
    Complex term = 1.0;
    Complex sum = 1.0;
    for (int n = 0; n < m; ++n) {
        const double nd = static_cast<double>(n);
        term *= (a + nd) * (b + nd) / ((c + nd) * (nd + 1.0)) * z;
        sum += term;
    }
    return sum;
}

// Gamma(n1)Gamma(n2) / (Gamma(d1)Gamma(d2)). A pole in the denominator
// annihilates the quotient; a pole in the numerator is a genuine pole.
Complex gamma_quotient(Complex n1, Complex n2, Complex d1, Complex d2) {
    check_pole(n1, "hyp2f1 connection");
    check_pole(n2, "hyp2f1 connection");
    if (near_nonpositive_integer(d1) || near_nonpositive_integer(d2)) {
        return 0.0;
    }
    return gamma(n1) * gamma(n2) / (gamma(d1) * gamma(d2));
}

// DLMF 15.8.10: c = a + b exactly, w = 1 - z in (0, 1).
Complex log_case_2f1(Complex a, Complex b, Complex c, double w) {
    check_pole(a, "hyp2f1 log case");
    check_pole(b, "hyp2f1 log case");
    const Complex pref = gamma(c) / (gamma(a) * gamma(b));
    const double lw = std::log(w);
    Complex p = 1.0;  // (a)_k (b)_k w^k / (k!)^2
    Complex psa = digamma(a);
    Complex psb = digamma(b);
    double psk = -kEulerGamma;  // psi(k+1)
    Complex sum = 0.0;
    int settled = 0;
    for (int k = 0; k < kMaxTerms; ++k) {
        const Complex term = p * (2.0 * psk - psa - psb - lw);
        sum += term;
        if (std::abs(term) < 1e-16 * std::abs(sum)) {
            if (++settled == 3) break;
        } else {
            settled = 0;
        }
        const double kd = static_cast<double>(k);
        p *= (a + kd) * (b + kd) * (w / ((kd + 1.0) * (kd + 1.0)));
        psa += 1.0 / (a + kd);
        psb += 1.0 / (b + kd);
        psk += 1.0 / (kd + 1.0);
    }
    return pref * sum;
}

// Linear connection formula (DLMF 15.8.4) mapping z in (0.9, 1) onto
// series in w = 1 - z <= 0.1.
Complex connection_2f1(Complex a, Complex b, Complex c, double z) {
    const double w = 1.0 - z;
    const Complex d = c - a - b;
    const double nearest = std::round(d.real());
    const double dist = std::abs(d - Complex(nearest, 0.0));
    if (nearest == 0.0 && dist <= kPoleTol) {
        return log_case_2f1(a, b, c, w);
    }
    if (dist < 1e-3) {
        throw DegenerateConnectionError(
            "hyp2f1: c-a-b within 1e-3 of an integer; connection formula degenerate");
    }
    const Complex t1 = gamma_quotient(c, d, c - a, c - b) * series_2f1(a, b, 1.0 - d, w);
    const Complex t2 = std::pow(Complex(w, 0.0), d) * gamma_quotient(c, -d, a, b) *
                       series_2f1(c - a, c - b, 1.0 + d, w);
    return t1 + t2;
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, double z) {
    if (!(z < 1.0)) {
        throw InvalidDomain("hyp2f1: requires real z < 1");
    }
    check_pole(c, "hyp2f1");
    if (near_nonpositive_integer(a)) return terminating_2f1(a, b, c, z);
    if (near_nonpositive_integer(b)) return terminating_2f1(b, a, c, z);
    if (z == 0.0) return 1.0;
    if (z < 0.0) {
        // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1))
        const double w = z / (z - 1.0);
        return std::pow(Complex(1.0 - z, 0.0), -a) * hyp2f1(a, c - b, c, w);
    }
    if (z <= kSeriesSwitch) return series_2f1(a, b, c, z);
    return connection_2f1(a, b, c, z);
}

}  // namespace growfrag::specfun
