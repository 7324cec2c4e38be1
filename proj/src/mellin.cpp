#include "growfrag/mellin.hpp"

#include <cmath>

#include "growfrag/errors.hpp"
#include "growfrag/quadrature.hpp"

namespace growfrag {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_time_open(const ProblemParams& p, double t, const char* who) {
    if (!(t > 0.0) || !(t < 1.0 / p.gamma)) {
        throw TimeOutOfRange(std::string(who) + ": t outside (0, 1/gamma)");
    }
}

void check_s(Complex s, const char* who) {
    if (!(s.real() > 0.0)) {
        throw InvalidDomain(std::string(who) + ": requires Re s > 0");
    }
}

}  // namespace

void validate(const ContourSpec& contour) {
    if (!(contour.s0 > 0.0) || !(contour.height > 0.0) || contour.nodes < 16) {
        throw InvalidParam("ContourSpec: requires s0 > 0, height > 0, nodes >= 16");
    }
}

Complex snapshot_mellin(const SolutionSnapshot& snap, Complex s) {
    check_s(s, "snapshot_mellin");
    const ProblemParams& p = snap.params;
    const double t = snap.t;
    const Complex atom =
        snap.atom.mass * std::pow(Complex(snap.atom.location, 0.0), s - 1.0);
    const double front = front_position(p, t);
    const auto integrand = [&](double x) {
        return std::pow(Complex(x, 0.0), s - 1.0) * regular_density(p, t, x);
    };
    const Complex regular = quadrature::integrate_to_origin(integrand, front, 1e-10);
    return atom + regular;
}

double inverse_mellin_regular(const ProblemParams& p, double t, double x,
                              const ContourSpec& contour, double tol) {
    check_time_open(p, t, "inverse_mellin_regular");
    validate(contour);
    if (!(x > 0.0)) throw InvalidDomain("inverse_mellin_regular: requires x > 0");
    const double gt = p.gamma * t;
    const double front = std::pow(1.0 - gt, -1.0 / p.gamma);
    if (std::abs(x - front) < 1e-6) {
        throw InvalidDomain("inverse_mellin_regular: x too close to the front");
    }

    const double log_x = std::log(x);
    const double log_omt = std::log(1.0 - gt);
    const Complex a = p.sigma1 / p.gamma;
    const Complex b = p.sigma2 / p.gamma;
    // integrand after removing the atom image (1-gt)^{(2-s)/g} and the
    // theta*t/s head of F - 1
    const auto g_of = [&](double tau) {
        const Complex s(contour.s0, tau);
        const Complex f = specfun::hyp2f1(a, b, s / p.gamma, gt);
        const Complex rem = f - 1.0 - p.theta * t / s;
        return std::exp(-s * log_x + (2.0 - s) / p.gamma * log_omt) * rem;
    };

    const int n = contour.nodes;
    const double dtau = 2.0 * contour.height / (n - 1);
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double tau = -contour.height + dtau * j;
        const Complex g = g_of(tau);
        sum += (j == 0 || j == n - 1) ? 0.5 * g : g;
    }
    const double quad = (sum.real() * dtau) / (2.0 * kPi);

    // tail estimate: |g| ~ C (1+|tau|)^{-2} at the truncation point, with
    // extra cancellation from the e^{i tau log(x/front)} oscillation
    const double g_end = std::max(std::abs(g_of(contour.height)), std::abs(g_of(-contour.height)));
    const double osc = std::abs(std::log(x / front));
    const double tail =
        g_end * std::min(1.0 + contour.height, 2.0 / std::max(osc, 1e-300)) / kPi;
    if (tail > tol) {
        throw ContourTooShort("inverse_mellin_regular: estimated truncation tail " +
                              std::to_string(tail) + " exceeds tolerance");
    }

    const double head = x < front ? p.theta * t * std::pow(1.0 - gt, 2.0 / p.gamma) : 0.0;
    return head + quad;
}

double evolution_residual(const ProblemParams& p, double t, Complex s, double dt) {
    check_time_open(p, t, "evolution_residual");
    check_s(s, "evolution_residual");
    if (!(dt > 0.0) || !(dt < 0.5 * std::min(t, 1.0 / p.gamma - t))) {
        throw InvalidDomain("evolution_residual: dt must lie in (0, min(t, 1/g - t)/2)");
    }
    const Complex ddt =
        (solution_mellin(p, t + dt, s) - solution_mellin(p, t - dt, s)) / (2.0 * dt);
    const Complex rhs = cumulant(p, s) * solution_mellin(p, t, s + p.gamma);
    return std::abs(ddt - rhs);
}

Complex beta_moment_integral(const ProblemParams& p, double t, int n, Complex s) {
    check_time_open(p, t, "beta_moment_integral");
    check_s(s, "beta_moment_integral");
    if (n < 0) throw InvalidDomain("beta_moment_integral: requires n >= 0");
    const double g = p.gamma;
    const Complex lg = std::lgamma(static_cast<double>(n) + 1.0) +
                       specfun::log_gamma(s / g) -
                       specfun::log_gamma(1.0 + s / g + static_cast<double>(n));
    return std::pow(Complex(1.0 - g * t, 0.0), -s / g) * std::exp(lg) / g;
}

Complex beta_moment_quadrature(const ProblemParams& p, double t, int n, Complex s,
                               double rel_tol) {
    check_time_open(p, t, "beta_moment_quadrature");
    check_s(s, "beta_moment_quadrature");
    if (n < 0) throw InvalidDomain("beta_moment_quadrature: requires n >= 0");
    const double gt = p.gamma * t;
    const double front = std::pow(1.0 - gt, -1.0 / p.gamma);
    const auto f = [&](double x) {
        const double base = 1.0 + (gt - 1.0) * std::pow(x, p.gamma);
        return std::pow(Complex(x, 0.0), s - 1.0) *
               std::pow(std::max(base, 0.0), static_cast<double>(n));
    };
    return quadrature::integrate_to_origin(f, front, rel_tol);
}

Complex normalized_profile_mellin(const ProblemParams& p, double t, Complex s) {
    check_time_open(p, t, "normalized_profile_mellin");
    check_s(s, "normalized_profile_mellin");
    const double gt = p.gamma * t;
    const Complex f =
        specfun::hyp2f1(p.sigma1 / p.gamma, p.sigma2 / p.gamma, s / p.gamma, gt);
    return std::pow(Complex(1.0 - gt, 0.0), -s / p.gamma) * (f - 1.0) / (p.theta * t);
}

}  // namespace growfrag
