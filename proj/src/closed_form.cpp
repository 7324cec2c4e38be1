#include "growfrag/closed_form.hpp"

#include <cmath>

#include "growfrag/errors.hpp"

namespace growfrag {

namespace {

void check_time(const ProblemParams& p, double t, bool strict_positive, const char* who) {
    const double limit = 1.0 / p.gamma;
    if (!(t < limit) || t < 0.0 || (strict_positive && t == 0.0)) {
        throw TimeOutOfRange(std::string(who) + ": t outside the existence interval");
    }
}

void check_s(Complex s, const char* who) {
    if (!(s.real() > 0.0)) {
        throw InvalidDomain(std::string(who) + ": requires Re s > 0");
    }
}

}  // namespace

double blowup_time(const ProblemParams& p) { return 1.0 / p.gamma; }

double front_position(const ProblemParams& p, double t) {
    check_time(p, t, false, "front_position");
    return std::pow(1.0 - p.gamma * t, -1.0 / p.gamma);
}

AtomComponent atom_state(const ProblemParams& p, double t) {
    check_time(p, t, false, "atom_state");
    AtomComponent a;
    a.location = std::pow(1.0 - p.gamma * t, -1.0 / p.gamma);
    a.mass = std::pow(1.0 - p.gamma * t, 1.0 / p.gamma);
    return a;
}

double regular_density(const ProblemParams& p, double t, double x) {
    check_time(p, t, true, "regular_density");
    if (!(x > 0.0)) throw InvalidDomain("regular_density: requires x > 0");
    const double gt = p.gamma * t;
    const double front = std::pow(1.0 - gt, -1.0 / p.gamma);
    if (x > front) return 0.0;
    const double z = gt * (1.0 + (gt - 1.0) * std::pow(x, p.gamma));
    const Complex f =
        specfun::hyp2f1(1.0 + p.sigma1 / p.gamma, 1.0 + p.sigma2 / p.gamma, 2.0, z);
    return p.theta * std::pow(1.0 - gt, 2.0 / p.gamma) * t * f.real();
}

Complex solution_mellin(const ProblemParams& p, double t, Complex s) {
    check_time(p, t, false, "solution_mellin");
    check_s(s, "solution_mellin");
    return specfun::hyp2f1((s - p.sigma1) / p.gamma, (s - p.sigma2) / p.gamma, s / p.gamma,
                           p.gamma * t);
}

Complex solution_mellin_euler(const ProblemParams& p, double t, Complex s) {
    check_time(p, t, false, "solution_mellin_euler");
    check_s(s, "solution_mellin_euler");
    const double gt = p.gamma * t;
    const Complex f =
        specfun::hyp2f1(p.sigma1 / p.gamma, p.sigma2 / p.gamma, s / p.gamma, gt);
    return std::pow(Complex(1.0 - gt, 0.0), (2.0 - s) / p.gamma) * f;
}

Complex atom_mellin(const ProblemParams& p, double t, Complex s) {
    check_time(p, t, false, "atom_mellin");
    return std::pow(Complex(1.0 - p.gamma * t, 0.0), (2.0 - s) / p.gamma);
}

double moment(const ProblemParams& p, double t, double r) {
    if (!(r > -1.0)) throw InvalidDomain("moment: requires r > -1");
    return solution_mellin(p, t, Complex(r + 1.0, 0.0)).real();
}

Complex complex_moment(const ProblemParams& p, double t, Complex r) {
    return solution_mellin(p, t, r + 1.0);
}

double blowup_constant(const ProblemParams& p, double r) {
    if (!(r > 0.0)) throw InvalidDomain("blowup_constant: requires r > 0");
    const double g = p.gamma;
    using specfun::gamma;
    Complex value;
    if (r > 1.0) {
        value = gamma(Complex((r + 1.0) / g, 0.0)) * gamma(Complex((r - 1.0) / g, 0.0)) /
                (gamma((r + 1.0 - p.sigma1) / g) * gamma((r + 1.0 - p.sigma2) / g));
    } else if (r == 1.0) {
        value = gamma(Complex(2.0 / g, 0.0)) /
                (gamma(p.sigma1 / g) * gamma(p.sigma2 / g));
    } else {
        value = gamma(Complex((r + 1.0) / g, 0.0)) * gamma(Complex((1.0 - r) / g, 0.0)) /
                (gamma(p.sigma1 / g) * gamma(p.sigma2 / g));
    }
    return value.real();
}

double scaled_moment(const ProblemParams& p, double t, double r) {
    check_time(p, t, true, "scaled_moment");
    const double m = moment(p, t, r);
    const double gt = p.gamma * t;
    if (r > 1.0) return std::pow(1.0 - gt, (r - 1.0) / p.gamma) * m;
    if (r == 1.0) return -m / std::log(1.0 - gt);
    return m;
}

double limit_profile(const ProblemParams& p, double x) {
    if (!(x > 0.0)) throw InvalidDomain("limit_profile: requires x > 0");
    const double g = p.gamma;
    const Complex c = specfun::gamma(Complex(2.0 / g, 0.0)) /
                      (specfun::gamma(p.sigma1 / g) * specfun::gamma(p.sigma2 / g));
    return g * c.real() * std::pow(1.0 + std::pow(x, g), -2.0 / g);
}

SolutionSnapshot make_snapshot(const ProblemParams& p, double t, const RadialGrid& grid) {
    SolutionSnapshot snap;
    snap.params = p;
    snap.t = t;
    snap.atom = atom_state(p, t);
    snap.regular.grid = grid;
    snap.regular.values.resize(grid.cells());
    for (std::size_t i = 0; i < grid.cells(); ++i) {
        snap.regular.values[i] = regular_density(p, t, grid.centers[i]);
    }
    return snap;
}

}  // namespace growfrag
