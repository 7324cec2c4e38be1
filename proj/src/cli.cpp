#include "growfrag/cli.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "growfrag/closed_form.hpp"
#include "growfrag/errors.hpp"
#include "growfrag/mellin.hpp"
#include "growfrag/model.hpp"
#include "growfrag/pde.hpp"

namespace growfrag::cli {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt_complex(Complex z) {
    std::string s = fmt17(z.real());
    s += z.imag() < 0.0 ? " - " : " + ";
    s += fmt17(std::abs(z.imag()));
    s += "i";
    return s;
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw InvalidParam("malformed numeric list entry: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw InvalidParam("empty numeric list");
    return out;
}

// Collects PASS/FAIL lines for the verify-* subcommands.
class Checks {
  public:
    void check(const std::string& name, double value, double tol) {
        const bool ok = value <= tol;
        all_ok_ &= ok;
        std::cout << (ok ? "PASS " : "FAIL ") << name << " " << fmt17(value) << " "
                  << fmt17(tol) << "\n";
    }
    int exit_code() const { return all_ok_ ? 0 : 2; }

  private:
    bool all_ok_ = true;
};

struct CommonOpts {
    double gamma = 0.8;
    double theta = 2.0;
    int jobs = 1;
};

// Evaluates fn(i) for i in [0, n) with `jobs` workers, preserving order.
template <typename Fn>
std::vector<std::string> ordered_rows(int n, int jobs, Fn&& fn) {
    std::vector<std::string> rows(n);
    if (jobs <= 1) {
        for (int i = 0; i < n; ++i) rows[i] = fn(i);
        return rows;
    }
    std::vector<std::future<void>> workers;
    std::atomic<int> next{0};
    for (int w = 0; w < jobs; ++w) {
        workers.push_back(std::async(std::launch::async, [&] {
            for (int i = next++; i < n; i = next++) rows[i] = fn(i);
        }));
    }
    for (auto& f : workers) f.get();
    return rows;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidParam("cannot open output file " + path);
    out << body;
}

double resolve_time(const ProblemParams& p, double t_abs, double t_frac, bool has_abs,
                    bool has_frac) {
    if (has_abs == has_frac) {
        throw InvalidParam("exactly one of --t and --t-frac is required");
    }
    return has_abs ? t_abs : t_frac / p.gamma;
}

int cmd_profile(const CommonOpts& common, double t_abs, double t_frac, bool has_t,
                bool has_t_frac, double x_min, double x_max, std::size_t cells,
                const std::string& spacing, const std::string& out_path) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    const double t = resolve_time(p, t_abs, t_frac, has_t, has_t_frac);
    const RadialGrid grid = spacing == "uniform" ? RadialGrid::uniform(x_min, x_max, cells)
                                                 : RadialGrid::log_uniform(x_min, x_max, cells);
    const SolutionSnapshot snap = make_snapshot(p, t, grid);
    std::string body = "# gamma=" + fmt17(p.gamma) + " theta=" + fmt17(p.theta) +
                       " t=" + fmt17(t) + " atom_location=" + fmt17(snap.atom.location) +
                       " atom_mass=" + fmt17(snap.atom.mass) + "\n";
    body += "x,u_regular\n";
    for (std::size_t i = 0; i < grid.cells(); ++i) {
        body += fmt17(grid.centers[i]) + "," + fmt17(snap.regular.values[i]) + "\n";
    }
    write_file(out_path, body);
    return 0;
}

std::string moment_row(const ProblemParams& p, double t, double r) {
    const double m = moment(p, t, r);
    const double sm = scaled_moment(p, t, r);
    const double limit = blowup_constant(p, r);
    const double rel = std::abs(sm / limit - 1.0);
    return fmt17(t) + "," + fmt17(r) + "," + fmt17(m) + "," + fmt17(sm) + "," + fmt17(limit) +
           "," + fmt17(rel);
}

int cmd_moments(const CommonOpts& common, const std::string& t_list,
                const std::string& t_frac_list, const std::string& r_list,
                const std::string& out_path) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    if (t_list.empty() == t_frac_list.empty()) {
        throw InvalidParam("exactly one of --t-list and --t-frac-list is required");
    }
    std::vector<double> times = parse_list(t_list.empty() ? t_frac_list : t_list);
    if (t_list.empty()) {
        for (double& t : times) t /= p.gamma;
    }
    const std::vector<double> orders = parse_list(r_list);
    std::vector<std::pair<double, double>> cases;
    for (double t : times) {
        for (double r : orders) cases.emplace_back(t, r);
    }
    const auto rows = ordered_rows(static_cast<int>(cases.size()), common.jobs, [&](int i) {
        return moment_row(p, cases[i].first, cases[i].second);
    });
    std::string body = "t,r,moment,scaled_moment,limit_constant,rel_err\n";
    for (const auto& row : rows) body += row + "\n";
    write_file(out_path, body);
    return 0;
}

int cmd_blowup(const CommonOpts& common, double r, const std::string& t_list,
               const std::string& t_frac_list, const std::string& out_path) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    if (t_list.empty() == t_frac_list.empty()) {
        throw InvalidParam("exactly one of --t-list and --t-frac-list is required");
    }
    std::vector<double> times = parse_list(t_list.empty() ? t_frac_list : t_list);
    if (t_list.empty()) {
        for (double& t : times) t /= p.gamma;
    }
    const auto rows = ordered_rows(static_cast<int>(times.size()), common.jobs,
                                   [&](int i) { return moment_row(p, times[i], r); });
    std::string body = "t,r,moment,scaled_moment,limit_constant,rel_err\n";
    for (const auto& row : rows) body += row + "\n";
    write_file(out_path, body);
    return 0;
}

int cmd_phi(const CommonOpts& common) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    std::cout << "theta  = " << fmt17(p.theta) << "\n";
    std::cout << "roots  : sigma1 = " << fmt_complex(p.sigma1)
              << ", sigma2 = " << fmt_complex(p.sigma2) << "\n";
    const CumulantInfimum inf = cumulant_infimum(p);
    std::cout << "inf phi = " << fmt17(inf.value) << " at s = " << fmt17(inf.minimizer) << "\n";
    if (inf.existence_condition_holds) {
        std::cout << "condition inf phi < 0: satisfied "
                     "(global-existence condition of the general theory holds)\n";
    } else {
        std::cout << "condition inf phi < 0: not satisfied "
                     "(outside the scope of the general global-existence result)\n";
    }
    std::cout << "kernel second moment over [1/2,1) = " << fmt17(kernel_second_moment(p))
              << " (equals theta/24; unit normalization would require theta = 24)\n";
    return 0;
}

int cmd_verify_mellin(const CommonOpts& common, double height, int nodes) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    Checks checks;
    const double tb = 1.0 / p.gamma;

    // two forms of the solution transform agree
    const std::vector<double> t_grid = {0.1 * tb, 0.3 * tb, 0.5 * tb, 0.7 * tb, 0.9 * tb};
    const std::vector<Complex> s_grid = {0.5, 1.0, 2.0, 3.7, Complex(1.0, 2.0)};
    double worst = 0.0;
    for (double t : t_grid) {
        for (Complex s : s_grid) {
            const Complex a = solution_mellin(p, t, s);
            const Complex b = solution_mellin_euler(p, t, s);
            worst = std::max(worst, std::abs(a - b) / std::abs(a));
        }
    }
    checks.check("mellin_two_forms", worst, 1e-10);

    // conserved complex moments at the cumulant roots
    worst = 0.0;
    for (double f : {0.1, 0.5, 0.9, 0.99}) {
        worst = std::max(worst, std::abs(solution_mellin(p, f * tb, p.sigma1) - 1.0));
        worst = std::max(worst, std::abs(solution_mellin(p, f * tb, p.sigma2) - 1.0));
    }
    checks.check("mellin_root_invariant", worst, 1e-10);

    // functional equation residual and its O(dt^2) decay
    const double t0 = 0.4 * tb;
    checks.check("mellin_ode_residual", evolution_residual(p, t0, 2.0, 1e-4), 1e-6);
    const double r1 = evolution_residual(p, t0, 2.0, 1e-3);
    const double r2 = evolution_residual(p, t0, 2.0, 5e-4);
    const double r4 = evolution_residual(p, t0, 2.0, 2.5e-4);
    checks.check("mellin_ode_order", std::abs(r1 / r2 - 4.0) + std::abs(r2 / r4 - 4.0), 1.6);

    // beta-type integral: closed form vs quadrature
    worst = 0.0;
    for (int n : {0, 1, 3}) {
        for (Complex s : {Complex(1.0, 0.0), Complex(2.0, 0.0), Complex(1.5, 0.5)}) {
            const Complex c = beta_moment_integral(p, 0.5 * tb, n, s);
            const Complex q = beta_moment_quadrature(p, 0.5 * tb, n, s);
            worst = std::max(worst, std::abs(c - q) / std::abs(c));
        }
    }
    checks.check("beta_integral_quadrature", worst, 1e-9);

    // reassembly: atom + theta t (1-gt)^{2/g} M_v = solution transform
    worst = 0.0;
    for (double t : t_grid) {
        const double amp = p.theta * t * std::pow(1.0 - p.gamma * t, 2.0 / p.gamma);
        for (Complex s : s_grid) {
            const Complex lhs = atom_mellin(p, t, s) + amp * normalized_profile_mellin(p, t, s);
            const Complex rhs = solution_mellin(p, t, s);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
    }
    checks.check("reassembly_identity", worst, 1e-10);

    // forward transform of the snapshot vs the closed form
    const RadialGrid grid = RadialGrid::log_uniform(1e-3, 10.0, 256);
    const SolutionSnapshot snap = make_snapshot(p, 0.5 * tb, grid);
    worst = 0.0;
    for (Complex s : {Complex(0.7, 0.0), Complex(1.0, 0.0), Complex(2.0, 0.0),
                      Complex(3.3, 0.0), Complex(2.0, 1.0)}) {
        const Complex fwd = snapshot_mellin(snap, s);
        const Complex ref = solution_mellin(p, 0.5 * tb, s);
        worst = std::max(worst, std::abs(fwd - ref) / std::abs(ref));
    }
    checks.check("forward_mellin", worst, 1e-6);

    // contour inversion vs the closed-form density, two abscissas
    worst = 0.0;
    double worst_gap = 0.0;
    for (double x : {0.5, 1.0, 2.0}) {
        double prev = 0.0;
        for (double s0 : {0.5, 2.0}) {
            const ContourSpec contour{s0, height, nodes};
            const double inv = inverse_mellin_regular(p, 0.5 * tb, x, contour);
            const double ref = regular_density(p, 0.5 * tb, x);
            worst = std::max(worst, std::abs(inv - ref));
            if (s0 != 0.5) worst_gap = std::max(worst_gap, std::abs(inv - prev));
            prev = inv;
        }
    }
    checks.check("inverse_mellin", worst, 1e-4);
    checks.check("inverse_mellin_abscissa_independence", worst_gap, 2e-4);
    return checks.exit_code();
}

int cmd_verify_pde(const CommonOpts& common, std::size_t cells, double cfl, double l1_tol,
                   bool order_check) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    Checks checks;
    const double tb = 1.0 / p.gamma;
    const double t0 = 0.2 * tb;
    const double t1 = 0.5 * tb;

    const auto l1_error = [&](std::size_t n) {
        const RadialGrid grid = RadialGrid::log_uniform(1e-3, 10.0, n);
        const GridFunction sol = solve_regular(p, t0, t1, grid, cfl);
        double num = 0.0;
        double den = 0.0;
        double min_val = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double exact = regular_density(p, t1, grid.centers[i]);
            num += std::abs(sol.values[i] - exact) * grid.width(i);
            den += std::abs(exact) * grid.width(i);
            min_val = std::min(min_val, sol.values[i]);
        }
        return std::pair<double, double>(num / den, min_val);
    };

    const auto [err, min_val] = l1_error(cells);
    checks.check("pde_l1_error", err, l1_tol);
    checks.check("pde_positivity", -min_val, 1e-12);

    const AtomComponent a = integrate_atom_ode(p, t1);
    const AtomComponent ref = atom_state(p, t1);
    checks.check("atom_ode_location", std::abs(a.location / ref.location - 1.0), 1e-8);
    checks.check("atom_ode_mass", std::abs(a.mass / ref.mass - 1.0), 1e-8);

    if (order_check) {
        const auto [e1, m1] = l1_error(cells / 4);
        const auto [e2, m2] = l1_error(cells / 2);
        const double o1 = std::log2(e1 / e2);
        const double o2 = std::log2(e2 / err);
        const double order = 0.5 * (o1 + o2);
        checks.check("pde_l1_order_low", 0.8 - order, 0.0);
        checks.check("pde_l1_order_high", order - 1.2, 0.0);
    }
    return checks.exit_code();
}

int cmd_verify_weak(const CommonOpts& common, int nodes) {
    const ProblemParams p = make_params(common.gamma, common.theta);
    Checks checks;
    const double tb = 1.0 / p.gamma;
    const BumpTestFunction bumps[3] = {
        {0.4 * tb, 0.25 * tb, 1.2, 0.5},
        {0.5 * tb, 0.35 * tb, 0.8, 0.35},
        {0.3 * tb, 0.15 * tb, 1.0, 0.7},
    };
    int idx = 0;
    for (const auto& bump : bumps) {
        const double res = weak_residual(p, bump, nodes);
        checks.check("weak_residual_bump" + std::to_string(idx), res, 1e-5);
        const double fine = weak_residual(p, bump, 2 * nodes);
        checks.check("weak_residual_refines_bump" + std::to_string(idx),
                     fine - std::max(res, 1e-12), 0.0);
        ++idx;
    }
    return checks.exit_code();
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Closed-form and numerical studies of a growth-fragmentation "
                 "equation with constant fragment kernel"};
    app.fallthrough();
    app.set_config("--config")->envname("GROWFRAG_CONFIG");

    CommonOpts common;
    app.add_option("--gamma", common.gamma, "growth exponent (> 0)")->capture_default_str();
    app.add_option("--theta", common.theta, "kernel height (> 0, != 1)")->capture_default_str();
    app.add_option("--jobs", common.jobs, "parallel workers for independent cases")
        ->capture_default_str();

    // profile
    auto* profile = app.add_subcommand("profile", "sample the regular density on a grid");
    double t_abs = 0.0, t_frac = 0.0;
    double x_min = 1e-3, x_max = 5.0;
    std::size_t cells = 1000;
    std::string spacing = "log";
    std::string out_path;
    auto* t_opt = profile->add_option("--t", t_abs, "time (absolute)");
    auto* t_frac_opt = profile->add_option("--t-frac", t_frac, "time as a fraction of 1/gamma");
    profile->add_option("--x-min", x_min, "grid lower edge")->capture_default_str();
    profile->add_option("--x-max", x_max, "grid upper edge")->capture_default_str();
    profile->add_option("--cells", cells, "cell count")->capture_default_str();
    profile->add_option("--spacing", spacing, "log or uniform")->capture_default_str();
    profile->add_option("-o,--output", out_path, "output CSV path")->required();

    // moments
    auto* moments = app.add_subcommand("moments", "moments and blow-up scalings on a grid");
    std::string t_list, t_frac_list, r_list = "0.5,1,2";
    moments->add_option("--t-list", t_list, "comma-separated absolute times");
    moments->add_option("--t-frac-list", t_frac_list,
                        "comma-separated times as fractions of 1/gamma");
    moments->add_option("--r-list", r_list, "comma-separated moment orders")
        ->capture_default_str();
    moments->add_option("-o,--output", out_path, "output CSV path")->required();

    // blowup
    auto* blowup = app.add_subcommand("blowup", "scaled-moment convergence scan for one order");
    double blowup_r = 2.0;
    blowup->add_option("--r", blowup_r, "moment order")->capture_default_str();
    blowup->add_option("--t-list", t_list, "comma-separated absolute times");
    blowup->add_option("--t-frac-list", t_frac_list,
                       "comma-separated times as fractions of 1/gamma");
    blowup->add_option("-o,--output", out_path, "output CSV path")->required();

    // phi
    auto* phi = app.add_subcommand("phi", "cumulant roots, infimum and kernel report");

    // verify-*
    auto* vmellin = app.add_subcommand("verify-mellin", "transform identity checks");
    double height = 400.0;
    int nodes = 20001;
    vmellin->add_option("--height", height, "contour truncation height")->capture_default_str();
    vmellin->add_option("--nodes", nodes, "contour node count")->capture_default_str();

    auto* vpde = app.add_subcommand("verify-pde", "finite-volume and atom ODE checks");
    std::size_t pde_cells = 4000;
    double cfl = 0.9, l1_tol = 0.03;
    bool order_check = false;
    vpde->add_option("--cells", pde_cells, "cell count")->capture_default_str();
    vpde->add_option("--cfl", cfl, "CFL number in (0,1]")->capture_default_str();
    vpde->add_option("--l1-tol", l1_tol, "relative L1 tolerance")->capture_default_str();
    vpde->add_flag("--order-check", order_check, "also run the grid-refinement order study");

    auto* vweak = app.add_subcommand("verify-weak", "weak-form residual checks");
    int weak_nodes = 256;
    vweak->add_option("--nodes", weak_nodes, "quadrature nodes per axis")
        ->capture_default_str();

    app.require_subcommand(1);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("growfrag");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    try {
        if (profile->parsed()) {
            return cmd_profile(common, t_abs, t_frac, t_opt->count() > 0,
                               t_frac_opt->count() > 0, x_min, x_max, cells, spacing, out_path);
        }
        if (moments->parsed()) {
            return cmd_moments(common, t_list, t_frac_list, r_list, out_path);
        }
        if (blowup->parsed()) {
            return cmd_blowup(common, blowup_r, t_list, t_frac_list, out_path);
        }
        if (phi->parsed()) return cmd_phi(common);
        if (vmellin->parsed()) return cmd_verify_mellin(common, height, nodes);
        if (vpde->parsed()) return cmd_verify_pde(common, pde_cells, cfl, l1_tol, order_check);
        if (vweak->parsed()) return cmd_verify_weak(common, weak_nodes);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace growfrag::cli
