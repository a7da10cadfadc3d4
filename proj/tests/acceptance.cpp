// Acceptance gate: one pass/fail line per criterion, nonzero exit on failure.
// argv[1] is the repository root (for the bundled scenario configs).
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dglab/degiorgi.hpp"
#include "dglab/harnack.hpp"
#include "dglab/holder.hpp"
#include "dglab/scenario.hpp"
#include "dglab/solver.hpp"
#include "dglab/weights.hpp"

using namespace dglab;
namespace fs = std::filesystem;

namespace {

const double kPi = 3.14159265358979323846;
std::string g_root;

std::string scenario_file(const std::string& name) {
    return (fs::path(g_root) / "scenarios" / name).string();
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& s) {
        if (!detail.empty()) detail += "; ";
        detail += s;
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1
Check criterion1() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    Grid g = Grid::make(0.0, 1.0, 0.1, 201, 201);
    auto coeffs = EquationCoefficients::constants(g, 1.0, 0.0, 0.0);
    std::vector<double> rho(g.n_nodes(), 1.0);
    BoundaryData b;
    b.left = [](double) { return 0.0; };
    b.right = [](double) { return 0.0; };
    b.initial = [](double x) { return std::sin(kPi * x); };
    ScalarField u = solve_parabolic(g, coeffs, rho, b);
    double err = 0.0;
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) {
            double ex = std::exp(-kPi * kPi * g.t(j)) * std::sin(kPi * g.x(i));
            err = std::max(err, std::abs(u.at(i, j) - ex));
        }
    double dt = elapsed_s(t0);
    c.require(err < 2e-3, "Linf error " + fmt(err) + " >= 2e-3");
    c.require(dt < 5.0, "runtime " + fmt(dt) + "s >= 5s");
    c.note("Linf=" + fmt(err) + ", " + fmt(dt) + "s");
    return c;
}

// ---------------------------------------------------------------- criterion 2
Check criterion2() {
    Check c;
    Scenario sc = load_scenario(scenario_file("figure2_moving_interface.json"));
    WeightField f = build_weight(sc);
    const Grid& g = sc.grid;
    std::mt19937 rng(20260823u);
    std::uniform_real_distribution<double> ux(-0.8, 0.8), ur(0.03, 0.1), ut(0.1, 1.1);
    int accepted = 0, exact = 0, scaling_ok = 0;
    while (accepted < 50) {
        double x0 = ux(rng), r = ur(rng), t0 = ut(rng);
        // Admissibility for the identity at radius r and the doubled radius 2r:
        // spatial containment of B_{2r} and both waiting-time windows in (0,T).
        if (x0 - 2.0 * r < g.x_lo || x0 + 2.0 * r > g.x_hi) continue;
        if (t0 - 4.0 * r * r < 0.0 || t0 + 4.0 * r * r > g.t_hi) continue;
        accepted++;
        WaitingTimeIdentityReport rep =
            waiting_time_identities(f, x0, t0, r, 2.0 * r, sc.kappa);
        bool zero = rep.residual_back[1] == 0.0 && rep.residual_back[2] == 0.0 &&
                    rep.residual_forward[1] == 0.0 && rep.residual_forward[2] == 0.0;
        if (zero) exact++;
        if (rep.scaling_holds) scaling_ok++;
    }
    c.require(exact == 50, "identity residual nonzero on " + fmt(50 - exact) + " probes");
    c.require(scaling_ok == 50,
              "scaling inequality failed on " + fmt(50 - scaling_ok) + " probes");
    c.note("50/50 probes exact, scaling holds");
    return c;
}

// ---------------------------------------------------------------- criterion 3
Check criterion3() {
    Check c;
    {
        WeightField f;
        f.grid = Grid::make(0.0, 1.0, 1.0, 201, 3);
        f.part = RegionPartition::from_line(f.grid, 0.0, 0.5);
        f.rho.assign(f.grid.n_nodes(), 1.0);
        AinftyFit fit = fit_Ainfty(f, 1, default_ainfty_plan(f.grid));
        double k1 = fit_B2q(f, 1, 4.0, default_concentric_plan(f.grid));
        c.require(fit.K2 == 1.0, "flat weight: K2 = " + fmt(fit.K2) + " != 1");
        c.require(fit.varsigma == 1.0, "flat weight: varsigma = " + fmt(fit.varsigma));
        c.require(k1 <= 1.0, "flat weight: K1 = " + fmt(k1) + " > 1");
        c.require(fit.violations == 0, "flat weight: violations");
        c.note("flat: K2=1, varsigma=1, K1=" + fmt(k1));
    }
    {
        WeightField f;
        f.grid = Grid::make(-1.0, 1.0, 1.0, 201, 3);
        f.part = RegionPartition::from_line(f.grid, 0.0, 0.5);
        f.rho.resize(f.grid.n_nodes());
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < f.grid.nx; ++i) f.at(i, j) = std::abs(f.grid.x(i));
        AinftyFit fit = fit_Ainfty(f, 1, default_ainfty_plan(f.grid));
        double k1 = fit_B2q(f, 1, 4.0, default_concentric_plan(f.grid));
        c.require(fit.in_class, "|x| weight not fitted in class");
        c.require(fit.violations == 0,
                  "|x| weight: " + fmt(fit.violations) + " violations");
        c.require(std::isfinite(k1) && k1 > 0.0, "|x| weight: bad K1");
        c.note("|x|: 0 violations, K2=" + fmt(fit.K2));
    }
    return c;
}

// ---------------------------------------------------------------- criterion 4
Check criterion4() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    for (double cc : {0.5, 1.0, 2.0}) {
        for (double alpha : {0.5, 1.0, 2.0}) {
            for (double b : {1.5, 2.0, 4.0}) {
                double thr = std::pow(cc, -1.0 / alpha) * std::pow(b, -1.0 / (alpha * alpha));
                GiustiResult lo = giusti_iterate(0.99 * thr, cc, b, alpha, 40);
                GiustiResult hi = giusti_iterate(1.5 * std::max(thr, 1.0), cc, b, alpha, 40);
                c.require(lo.converged && lo.sequence.back() < 1e-12,
                          "no convergence at c=" + fmt(cc) + " a=" + fmt(alpha) +
                              " b=" + fmt(b));
                bool diverged = std::isinf(hi.sequence.back()) || hi.sequence.back() > 1.0;
                c.require(!hi.converged && diverged,
                          "no divergence at c=" + fmt(cc) + " a=" + fmt(alpha) +
                              " b=" + fmt(b));
            }
        }
    }
    double dt = elapsed_s(t0);
    c.require(dt < 1.0, "runtime " + fmt(dt) + "s >= 1s");
    c.note("27 lattice points, " + fmt(dt) + "s");
    return c;
}

// ---------------------------------------------------------------- criterion 5
std::vector<double> heat_gammas(int n) {
    Grid g = Grid::make(0.0, 1.0, 0.1, n, n);
    auto coeffs = EquationCoefficients::constants(g, 1.0, 0.0, 0.0);
    std::vector<double> rho(g.n_nodes(), 1.0);
    BoundaryData b;
    b.left = [](double) { return 0.0; };
    b.right = [](double) { return 0.0; };
    b.initial = [](double x) { return std::sin(kPi * x); };
    ScalarField u = solve_parabolic(g, coeffs, rho, b);
    WeightField f;
    f.grid = g;
    f.part = RegionPartition::from_line(g, 0.0, 0.5);
    f.rho = rho;
    // Physically anchored boxes so both resolutions see the same geometry.
    auto ib = [&](double xa, double xb, double ta) {
        return IndexBox{g.nearest_x(xa), g.nearest_x(xb), g.nearest_slice(ta), g.nt - 1};
    };
    IndexBox outer = ib(0.1, 0.9, 0.02);
    std::vector<IndexBox> inners = {ib(0.2, 0.8, 0.04), ib(0.3, 0.7, 0.04),
                                    ib(0.26, 0.74, 0.05)};
    std::vector<double> out;
    for (const auto& in : inners) {
        Cutoff z = make_cutoff(g, in, outer);
        EnergyReport er = energy_sides(g, u, f, z, 0.0, outer.j_lo, g.nt - 1,
                                       TruncationSign::plus);
        out.push_back(er.gamma_required);
    }
    return out;
}

Check criterion5() {
    Check c;
    std::vector<double> g1 = heat_gammas(101);
    std::vector<double> g2 = heat_gammas(201);
    for (std::size_t k = 0; k < g1.size(); ++k) {
        c.require(std::isfinite(g1[k]) && g1[k] > 0.0, "gamma not finite at 101");
        c.require(std::isfinite(g2[k]) && g2[k] > 0.0, "gamma not finite at 201");
        double drift = std::abs(g2[k] - g1[k]) / g1[k];
        c.require(drift < 0.10,
                  "cutoff " + fmt((double)k) + " drift " + fmt(drift) + " >= 10%");
    }
    c.note("gammas(201)=" + fmt(g2[0]) + "," + fmt(g2[1]) + "," + fmt(g2[2]));
    return c;
}

// ---------------------------------------------------------------- criterion 6
double gaussian_exact(double x, double t) {
    double s = t + 1.0;
    return std::exp(-x * x / (4.0 * s)) / std::sqrt(s);
}

std::vector<HarnackReport> gaussian_reports(const Scenario& sc, int n) {
    Grid g = Grid::make(sc.grid.x_lo, sc.grid.x_hi, sc.grid.t_hi, n, n);
    WeightField f;
    f.grid = g;
    f.part = RegionPartition::from_line(g, sc.iface_m, sc.iface_q);
    f.rho.assign(g.n_nodes(), 1.0);
    ScalarField u(g);
    for (int j = 0; j < g.nt; ++j)
        for (int i = 0; i < g.nx; ++i) u.at(i, j) = gaussian_exact(g.x(i), g.t(j));
    std::vector<HarnackReport> reps;
    for (const auto& p : sc.harnack_probes) reps.push_back(harnack_probe(u, f, p, sc.R_bar));
    return reps;
}

Check criterion6() {
    Check c;
    Scenario sc = load_scenario(scenario_file("gaussian_harnack.json"));
    auto reps = gaussian_reports(sc, sc.grid.nx);
    for (const auto& r : reps) {
        const auto& p = r.probe;
        // Flat weight: unit waiting times, so the target slices sit at t0 -+ r^2.
        double x_near = std::clamp(0.0, p.x0 - p.r, p.x0 + p.r); // closest to the peak
        double x_far = std::abs(p.x0 - p.r) > std::abs(p.x0 + p.r) ? p.x0 - p.r
                                                                   : p.x0 + p.r;
        double sup_ref = gaussian_exact(x_near, p.t0 - p.r * p.r);
        double inf_ref = gaussian_exact(x_far, p.t0 + p.r * p.r);
        double cen_ref = gaussian_exact(p.x0, p.t0);
        c.require(std::abs(r.center_value - cen_ref) < 1e-3,
                  "center off by " + fmt(std::abs(r.center_value - cen_ref)));
        c.require(std::abs(r.sup_past - sup_ref) < 1e-3,
                  "sup off by " + fmt(std::abs(r.sup_past - sup_ref)));
        c.require(std::abs(r.inf_future - inf_ref) < 1e-3,
                  "inf off by " + fmt(std::abs(r.inf_future - inf_ref)));
        c.require(std::isfinite(r.ratio_c) && std::isfinite(r.ratio_hat) &&
                      std::isfinite(r.ratio_paraboloid),
                  "non-finite ratio");
    }
    auto reps2 = gaussian_reports(sc, 2 * (sc.grid.nx - 1) + 1);
    for (std::size_t k = 0; k < reps.size(); ++k) {
        double d1 = std::abs(reps2[k].ratio_hat - reps[k].ratio_hat) / reps[k].ratio_hat;
        double d2 = std::abs(reps2[k].ratio_c - reps[k].ratio_c) / reps[k].ratio_c;
        c.require(d1 < 0.05, "ratio_hat drift " + fmt(d1) + " >= 5%");
        c.require(d2 < 0.05, "ratio_c drift " + fmt(d2) + " >= 5%");
    }
    c.note("ratio_hat(p0)=" + fmt(reps[0].ratio_hat));
    return c;
}

// ---------------------------------------------------------------- criterion 7
double expansion_lambda(const Scenario& sc, int n) {
    Grid g = Grid::make(sc.grid.x_lo, sc.grid.x_hi, sc.grid.t_hi, n, n);
    WeightField f;
    f.grid = g;
    f.part = RegionPartition::from_line(g, sc.iface_m, sc.iface_q);
    f.rho.assign(g.n_nodes(), sc.weight_value);
    auto coeffs = EquationCoefficients::constants(g, sc.coeff_a, sc.coeff_b, sc.coeff_c);
    Scenario sg = sc;
    sg.grid = g;
    BoundaryData b = build_boundary(sg);
    ScalarField u = solve_parabolic(g, coeffs, f.rho, b);
    // Auto level: measured minimum over the base ball at the probe slice.
    int jt0 = g.nearest_slice(sc.expansion.t0);
    NodeSet base = ball_region(g, f.part, sc.expansion.x0, sc.expansion.r, jt0, 1);
    double h_level = 1e300;
    base.for_each([&](int i, int j) { h_level = std::min(h_level, u.at(i, j)); });
    ExpansionReport rep = expansion_check(u, f, sc.expansion.x0, sc.expansion.t0,
                                          sc.expansion.r, h_level, sc.expansion.theta_grid);
    return rep.lambda_measured;
}

Check criterion7() {
    Check c;
    Scenario sc = load_scenario(scenario_file("expansion_bump.json"));
    double l1 = expansion_lambda(sc, sc.grid.nx);
    double l2 = expansion_lambda(sc, 2 * (sc.grid.nx - 1) + 1);
    c.require(l1 > 0.0 && l1 < 1.0, "lambda " + fmt(l1) + " outside (0,1)");
    c.require(l2 > 0.0 && l2 < 1.0, "doubled-grid lambda " + fmt(l2) + " outside (0,1)");
    double drift = std::abs(l2 - l1) / l1;
    c.require(drift < 0.10, "lambda drift " + fmt(drift) + " >= 10%");
    c.note("lambda=" + fmt(l1) + ", doubled=" + fmt(l2));
    return c;
}

// ---------------------------------------------------------------- criterion 8
Check criterion8() {
    Check c;
    auto t0 = std::chrono::steady_clock::now();
    Scenario sc = load_scenario(scenario_file("paper_s7_example.json"));
    const Grid& g = sc.grid;
    WeightField f = build_weight(sc);
    auto coeffs = build_coefficients(sc);
    BoundaryData b = build_boundary(sc);
    std::vector<double> eps;
    for (int k = 0; k <= sc.eps_kmax; ++k) eps.push_back(std::pow(2.0, -k));
    std::vector<double> rho0(g.n_nodes(), sc.rho0);
    auto family = solve_elliptic_parabolic(g, coeffs, f, rho0, b, eps);

    std::vector<NodeSet> targets;
    for (const auto& tc : sc.target_sets) {
        NodeSet s(g, NodeSet::Kind::spacetime);
        int ja = g.nearest_slice(std::max(0.0, tc.t0 - tc.r));
        int jb = g.nearest_slice(std::min(g.t_hi, tc.t0 + tc.r));
        for (int jt = ja; jt <= jb; ++jt)
            for (int i = 0; i < g.nx; ++i) {
                if (std::abs(g.x(i) - tc.x0) >= tc.r - 1e-12) continue;
                if (tc.region != 0 && f.part.label(i, jt) != (Region)tc.region) continue;
                s.add(i, jt);
            }
        targets.push_back(s);
    }
    ConvergenceReport conv = convergence_report(g, family, eps, targets, 1e-6);
    for (std::size_t k = 0; k + 1 < conv.l2_diff.size(); ++k)
        c.require(conv.l2_diff[k + 1] < conv.l2_diff[k],
                  "L2 diff not decreasing at step " + fmt((double)k));
    for (std::size_t k = 0; k < conv.target_checks.size(); ++k) {
        c.require(conv.target_checks[k].inf_check,
                  "limsup-inf check failed on target " + fmt((double)k));
        c.require(conv.target_checks[k].sup_check,
                  "liminf-sup check failed on target " + fmt((double)k));
    }

    std::vector<std::pair<double, double>> probes = {{0.0, 0.5}, {0.0, 1.5}, {-0.5, 0.5}};
    InterfaceExampleReport rep = interface_example_check(
        conv.limit, f, sc.interface_check.x_disc, sc.interface_check.t_disc, probes,
        sc.interface_check.radii);
    c.require(rep.discontinuity_confirmed && rep.jump > 1e-6,
              "discontinuity at (0.5,1) not confirmed, jump=" + fmt(rep.jump));
    for (const auto& p : rep.continuity_probes)
        c.require(p.pass, "continuity probe (" + fmt(p.x0) + "," + fmt(p.t0) +
                              ") alpha=" + fmt(p.alpha));
    c.require(rep.pass, "interface example check failed overall");
    double dt = elapsed_s(t0);
    c.require(dt < 60.0, "runtime " + fmt(dt) + "s >= 60s");
    c.note("jump=" + fmt(rep.jump) + ", " + fmt(dt) + "s");
    return c;
}

// ---------------------------------------------------------------- criterion 9
Check criterion9() {
    Check c;
    Scenario sc = load_scenario(scenario_file("forward_backward_sign.json"));
    auto coeffs = build_coefficients(sc);

    auto fb_weight = [&](const Grid& g) {
        WeightField f;
        f.grid = g;
        f.part = RegionPartition::from_line(g, sc.iface_m, sc.iface_q);
        f.rho.resize(g.n_nodes());
        for (int j = 0; j < g.nt; ++j)
            for (int i = 0; i < g.nx; ++i)
                f.at(i, j) = f.part.label(i, j) == Region::region2 ? sc.weight_region2
                                                                   : sc.weight_region1;
        return f;
    };

    // Constant data reproduce the constant.
    {
        WeightField f = fb_weight(sc.grid);
        BoundaryData one;
        one.left = one.right = [](double) { return 1.0; };
        one.initial = one.final_ = [](double) { return 1.0; };
        auto cf = EquationCoefficients::constants(sc.grid, sc.coeff_a, sc.coeff_b,
                                                  sc.coeff_c);
        ScalarField u = solve_forward_backward(sc.grid, cf, f, sc.eps_strip, one);
        double err = 0.0;
        for (double v : u.v) err = std::max(err, std::abs(v - 1.0));
        c.require(err < 1e-10, "constant data error " + fmt(err) + " >= 1e-10");
        c.note("const err=" + fmt(err));
    }

    // First-order self-convergence in dx at fixed physical strip width.
    {
        auto solve_n = [&](int n) {
            Grid g = Grid::make(sc.grid.x_lo, sc.grid.x_hi, sc.grid.t_hi, n, n);
            WeightField f = fb_weight(g);
            Scenario sg = sc;
            sg.grid = g;
            BoundaryData b = build_boundary(sg);
            auto cf = EquationCoefficients::constants(g, sc.coeff_a, sc.coeff_b,
                                                      sc.coeff_c);
            return std::make_pair(g, solve_forward_backward(g, cf, f, sc.eps_strip, b));
        };
        auto [g1, u1] = solve_n(51);
        auto [g2, u2] = solve_n(101);
        auto [g3, u3] = solve_n(201);
        auto diff_on_coarse = [](const Grid& gc, const ScalarField& uc, const Grid& gf,
                                 const ScalarField& uf) {
            int s = (gf.nx - 1) / (gc.nx - 1);
            double acc = 0.0;
            for (int j = 0; j < gc.nt; ++j)
                for (int i = 0; i < gc.nx; ++i) {
                    double d = uc.at(i, j) - uf.at(i * s, j * s);
                    acc += d * d;
                }
            return std::sqrt(acc / (double)gc.n_nodes());
        };
        double e1 = diff_on_coarse(g1, u1, g2, u2);
        double e2 = diff_on_coarse(g2, u2, g3, u3);
        c.require(e2 < 0.75 * e1, "self-convergence ratio " + fmt(e2 / e1) +
                                      " not first order (e1=" + fmt(e1) + ")");
        c.note("e1=" + fmt(e1) + ", e2=" + fmt(e2));
    }

    // Every probe ratio finite on the scenario solve.
    {
        WeightField f = fb_weight(sc.grid);
        BoundaryData b = build_boundary(sc);
        auto cf = EquationCoefficients::constants(sc.grid, sc.coeff_a, sc.coeff_b,
                                                  sc.coeff_c);
        ScalarField u = solve_forward_backward(sc.grid, cf, f, sc.eps_strip, b);
        auto reps = regime_harnack(u, f, sc.harnack_probes, Regime::forward_backward,
                                   sc.R_bar);
        for (const auto& r : reps)
            c.require(std::isfinite(r.ratio_sup) && std::isfinite(r.ratio_inf),
                      "non-finite ratio at probe x0=" + fmt(r.probe.x0));
    }

    // 201x201 global banded system under 10 s.
    {
        Grid g = Grid::make(sc.grid.x_lo, sc.grid.x_hi, sc.grid.t_hi, 201, 201);
        WeightField f = fb_weight(g);
        Scenario sg = sc;
        sg.grid = g;
        BoundaryData b = build_boundary(sg);
        auto cf = EquationCoefficients::constants(g, sc.coeff_a, sc.coeff_b, sc.coeff_c);
        auto t0 = std::chrono::steady_clock::now();
        ScalarField u = solve_forward_backward(g, cf, f, sc.eps_strip, b);
        double dt = elapsed_s(t0);
        c.require(dt < 10.0, "201x201 solve " + fmt(dt) + "s >= 10s");
        c.require(u.v.size() == (std::size_t)g.n_nodes(), "bad solution size");
        c.note("201x201 solve " + fmt(dt) + "s");
    }
    return c;
}

// --------------------------------------------------------------- criterion 10
std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Check criterion10() {
    Check c;
    Scenario sc = load_scenario(scenario_file("paper_s7_example.json"));
    fs::path base = fs::temp_directory_path() / "dglab_acceptance_det";
    fs::remove_all(base);
    fs::path d1 = base / "run1", d2 = base / "run2";
    run_scenario(sc, d1.string(), {"all"});
    run_scenario(sc, d2.string(), {"all"});
    std::vector<std::string> names1, names2;
    for (const auto& e : fs::directory_iterator(d1)) names1.push_back(e.path().filename());
    for (const auto& e : fs::directory_iterator(d2)) names2.push_back(e.path().filename());
    std::sort(names1.begin(), names1.end());
    std::sort(names2.begin(), names2.end());
    c.require(names1 == names2, "output file sets differ");
    c.require(!names1.empty(), "no outputs produced");
    for (const auto& n : names1)
        c.require(slurp(d1 / n) == slurp(d2 / n), "file " + n + " differs between runs");
    c.note(fmt((double)names1.size()) + " files byte-identical");
    return c;
}

} // namespace

int main(int argc, char** argv) {
    g_root = argc > 1 ? argv[1] : ".";
    struct Entry {
        int id;
        Check (*fn)();
    };
    Entry entries[] = {{1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
                       {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
                       {9, criterion9}, {10, criterion10}};
    int failures = 0;
    for (const auto& e : entries) {
        Check c;
        try {
            c = e.fn();
        } catch (const std::exception& ex) {
            c.ok = false;
            c.detail = std::string("exception: ") + ex.what();
        }
        std::printf("criterion %d: %s%s%s\n", e.id, c.ok ? "PASS" : "FAIL",
                    c.detail.empty() ? "" : " — ", c.detail.c_str());
        std::fflush(stdout);
        if (!c.ok) failures++;
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
