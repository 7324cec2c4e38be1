#include "growfrag/model.hpp"

#include <cmath>

#include "growfrag/errors.hpp"

namespace growfrag {

namespace {

void require_right_half_plane(Complex s, const char* who) {
    if (!(s.real() > 0.0)) {
        throw InvalidDomain(std::string(who) + ": requires Re s > 0");
    }
}

}  // namespace

ProblemParams make_params(double gamma, double theta) {
    if (!(gamma > 0.0)) throw InvalidParam("make_params: gamma must be > 0");
    if (!(theta > 0.0)) throw InvalidParam("make_params: theta must be > 0");
    if (std::abs(theta - 1.0) < 1e-12) {
        throw InvalidParam("make_params: theta = 1 is a double root and is rejected");
    }
    ProblemParams p;
    p.gamma = gamma;
    p.theta = theta;
    if (theta > 1.0) {
        const double d = std::sqrt(theta - 1.0);
        p.sigma1 = Complex(1.0, -d);
        p.sigma2 = std::conj(p.sigma1);
    } else {
        const double d = std::sqrt(1.0 - theta);
        p.sigma1 = Complex(1.0 - d, 0.0);
        p.sigma2 = Complex(1.0 + d, 0.0);
    }
    return p;
}

double kernel(const ProblemParams& p, double x) {
    return x < 1.0 ? p.theta : 0.0;
}

double kernel_second_moment(const ProblemParams& p) {
    return p.theta / 24.0;
}

Complex kernel_mellin(const ProblemParams& p, Complex s) {
    require_right_half_plane(s, "kernel_mellin");
    return p.theta / s;
}

Complex cumulant(const ProblemParams& p, Complex s) {
    require_right_half_plane(s, "cumulant");
    return p.theta / s + s - 2.0;
}

Complex cumulant_factored(const ProblemParams& p, Complex s) {
    require_right_half_plane(s, "cumulant_factored");
    return (s - p.sigma1) * (s - p.sigma2) / s;
}

CumulantInfimum cumulant_infimum(const ProblemParams& p) {
    const auto phi = [&p](double s) { return p.theta / s + s - 2.0; };

    // coarse scan; the symbol diverges at both ends of (0, inf), so the
    // interior minimum is bracketed by neighbours of the best sample
    const double lo = 1e-3;
    const double hi = 10.0 * std::sqrt(p.theta);
    const int n = 1000;
    int best = 0;
    double best_val = phi(lo);
    for (int i = 1; i < n; ++i) {
        const double s = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        const double v = phi(s);
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    const auto sample = [&](int i) { return lo + (hi - lo) * static_cast<double>(i) / (n - 1); };
    double a = sample(best > 0 ? best - 1 : 0);
    double b = sample(best < n - 1 ? best + 1 : n - 1);

    // golden-section refinement
    constexpr double kInvPhi = 0.61803398874989484820;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = phi(x1);
    double f2 = phi(x2);
    while (b - a > 1e-10 * (1.0 + std::abs(a))) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = phi(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = phi(x2);
        }
    }
    CumulantInfimum inf;
    inf.minimizer = 0.5 * (a + b);
    inf.value = phi(inf.minimizer);
    inf.existence_condition_holds = inf.value < 0.0;
    return inf;
}

double cumulant_infimum_positive(const ProblemParams& p) {
    if (!(p.theta > 1.0)) {
        throw InvalidParam(
            "cumulant_infimum_positive: theta <= 1 makes the infimum non-positive; "
            "use cumulant_infimum");
    }
    return cumulant_infimum(p).value;
}

}  // namespace growfrag
