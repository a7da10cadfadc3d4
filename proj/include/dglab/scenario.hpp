#ifndef DGLAB_SCENARIO_HPP
#define DGLAB_SCENARIO_HPP

#include <string>
#include <vector>

#include "dglab/grid.hpp"
#include "dglab/harnack.hpp"
#include "dglab/solver.hpp"
#include "dglab/weights.hpp"

namespace dglab {

struct FuncSpec {
    std::string kind = "constant";
    double value = 0.0;                       // constant
    double before = 0.0, after = 0.0, t_jump = 0.0; // step (in t)
    double center = 0.0, radius = 0.0, width = 0.0; // bump (in x)
    double v_lo = 0.0, v_hi = 0.0;            // linear (in x)
};

struct HolderProbeConfig {
    double x0 = 0.0, t0 = 0.0;
    std::vector<double> radii;
};

struct ExpansionConfig {
    bool enabled = false;
    double x0 = 0.0, t0 = 0.0, r = 0.0;
    double h_level = 0.0; // <= 0: use min u over B_r^j(x0;t0)
    std::vector<double> theta_grid;
};

struct TargetSetConfig {
    double x0 = 0.0, t0 = 0.0, r = 0.0;
    int region = 0;
};

struct InterfaceCheckConfig {
    bool enabled = false;
    double x_disc = 0.0, t_disc = 0.0;
    std::vector<std::pair<double, double>> probes;
    std::vector<double> radii;
};

struct Scenario {
    std::string name;
    Grid grid;
    double iface_m = 0.0, iface_q = 0.0;
    std::string weight_kind = "constant"; // constant | abs_x | piecewise_region
    double weight_value = 1.0;
    double weight_region1 = 1.0, weight_region2 = 1.0;
    Regime regime = Regime::homogeneous;
    double coeff_a = 1.0, coeff_b = 0.0, coeff_c = 0.0;
    bool conservative = false;
    FuncSpec bc_left, bc_right, bc_initial, bc_final;
    bool has_final = false;
    std::string solution_kind = "solve"; // solve | gaussian_kernel
    int eps_kmax = 10;
    double eps_strip = 0.0;
    double rho0 = 1.0;
    double R_bar = 1.0;
    double kappa = 0.2, delta = 0.1, q_exponent = 4.0;
    std::vector<double> discontinuity_times;
    std::vector<WeightProbe> weight_probes;
    std::vector<HarnackProbe> harnack_probes;
    std::vector<HolderProbeConfig> holder_probes;
    ExpansionConfig expansion;
    std::vector<TargetSetConfig> target_sets;
    InterfaceCheckConfig interface_check;
    std::vector<double> degiorgi_levels{0.0};
};

Scenario load_scenario(const std::string& path);

WeightField build_weight(const Scenario& sc);
EquationCoefficients build_coefficients(const Scenario& sc);
BoundaryData build_boundary(const Scenario& sc);
std::vector<int> discontinuity_slices(const Scenario& sc);

// Runs the requested stages (subset of solve, weights, degiorgi, harnack,
// holder, sweep-eps, plots; "all" expands to every stage) writing artifacts
// into outdir.  Throws the module error types; the CLI maps them to exit codes.
void run_scenario(const Scenario& sc, const std::string& outdir,
                  const std::vector<std::string>& stages, int parallel = 1);

// Reads holder.csv / harnack.csv / sweep.csv in outdir and writes the three
// SVG plots; throws ReportError when a report is missing.
void emit_plots(const std::string& outdir);

} // namespace dglab

#endif
