#ifndef DGLAB_WEIGHTS_HPP
#define DGLAB_WEIGHTS_HPP

#include <string>
#include <vector>

#include "dglab/geometry.hpp"
#include "dglab/grid.hpp"

namespace dglab {

// Weight density rho sampled on the grid together with the region partition.
// Region-restricted views rho_j / chi_j are produced by masking on demand.
struct WeightField {
    Grid grid;
    RegionPartition part;
    std::vector<double> rho; // per node, row-major (j*nx + i)

    double at(int i, int j) const { return rho[(std::size_t)j * grid.nx + i]; }
    double& at(int i, int j) { return rho[(std::size_t)j * grid.nx + i]; }

    bool in_region(int i, int j, int region) const {
        if (region == REGION_FULL) return true;
        Region lab = part.label(i, j);
        return (region == 1 && lab == Region::region1) ||
               (region == 2 && lab == Region::region2);
    }
};

enum class Restriction { rho, rho_j, chi_j, lebesgue };

// Midpoint-rule integral of the restricted weight over the set's cells.
double measure(const WeightField& f, const NodeSet& set, Restriction restr,
               int j = REGION_FULL);

struct WaitingTimes {
    // Indexed by region j in {1,2}; [0] unused.
    double h_past[3] = {0, 0, 0};   // mean of |rho| over (B_r x (t0-r^2, t0)) cap Q_j
    double h_future[3] = {0, 0, 0}; // forward mirror
    double h_past_max = 0.0;
    double h_future_max = 0.0;
};

WaitingTimes waiting_times(const WeightField& f, double x0, double t0, double r);

struct WaitingTimeIdentityReport {
    // Backward/forward gluing identities, per region j.
    double past_at_t0[3] = {0, 0, 0};
    double future_at_t0_minus_r2[3] = {0, 0, 0};
    double future_at_t0[3] = {0, 0, 0};
    double past_at_t0_plus_r2[3] = {0, 0, 0};
    double residual_back[3] = {0, 0, 0};
    double residual_forward[3] = {0, 0, 0};
    // Radius-scaling inequality h(r) <= (1/2kappa) (r_tilde/r)^3 h(r_tilde).
    double scaling_lhs[3] = {0, 0, 0};
    double scaling_rhs[3] = {0, 0, 0};
    bool scaling_holds = true;
};

WaitingTimeIdentityReport waiting_time_identities(const WeightField& f, double x0,
                                                  double t0, double r, double r_tilde,
                                                  double kappa);

double doubling_constant(const WeightField& f, int t_index,
                         const std::vector<double>& centers,
                         const std::vector<double>& radii);

// One (B,S) pair of the deterministic sampling plan: a ball given by center
// and radius, and a subinterval of it given by a dyadic fraction and an
// alignment (0 = left, 1 = centered, 2 = right).
struct IntervalSample {
    double center = 0.0;
    double radius = 0.0;
    double fraction = 0.5;
    int align = 1;
};

std::vector<IntervalSample> default_ainfty_plan(const Grid& g);

struct AinftyFit {
    double K2 = 1.0;
    double varsigma = 1.0;
    double b = 1.0;
    bool in_class = true;
    int violations = 0; // defining-inequality violations at the fitted constants
};

AinftyFit fit_Ainfty(const WeightField& f, int t_index,
                     const std::vector<IntervalSample>& plan);

struct ConcentricPair {
    double center = 0.0;
    double r = 0.0;   // inner radius
    double rho = 0.0; // outer radius, r < rho
};

std::vector<ConcentricPair> default_concentric_plan(const Grid& g);

double fit_B2q(const WeightField& f, int t_index, double q,
               const std::vector<ConcentricPair>& plan);

struct WeightProbe {
    double x0 = 0.0;
    double t0 = 0.0;
    double r = 0.0;
};

struct ProbeMargin {
    WeightProbe probe;
    int j = 0;
    double h2_rho_ratio = 0.0; // rho_j(t0)(B_r) / rho(t0)(B_r)
    double h2_chi_ratio = 0.0; // chi_j(t0)(B_r) / |B_r|
    double h3_rho_osc = 0.0;   // max_t,s |rho_j(t)(B)-rho_j(s)(B)| over the delta window
    double h3_chi_osc = 0.0;
    double rho_ball_t0 = 0.0;
    double leb_ball = 0.0;
};

struct WeightClassReport {
    double c_rho = 1.0;
    double K1 = 0.0, q = 4.0;
    double K2 = 1.0, varsigma = 1.0, b = 1.0;
    double kappa = 0.0, delta = 0.0, R_bar = 0.0;
    double L_continuity = 0.0;   // (H.1) bound estimate
    double L_supinf = 1.0;       // global-sup / windowed-inf constant (C.6 fit)
    double kappa_max = 0.0;      // largest admissible kappa over the probe plan
    double delta_max = 0.0;      // largest admissible delta at the given kappa
    bool h1_pass = false, h2_pass = false, h3_pass = false, h4_pass = false;
    bool ainfty_in_class = true;
    std::vector<ProbeMargin> margins;
};

WeightClassReport check_hypotheses(const WeightField& f, double kappa, double delta,
                                   double R_bar, const std::vector<WeightProbe>& probes,
                                   const std::vector<int>& excluded_slices = {});

struct ConsequenceResult {
    std::string name;
    double worst_margin = 0.0; // rhs - lhs at the tightest probe (>= 0 means pass)
    bool pass = true;
};

std::vector<ConsequenceResult> verify_consequences(const WeightField& f,
                                                   const WeightClassReport& report,
                                                   const std::vector<WeightProbe>& probes);

struct SobolevCheck {
    double lhs = 0.0;           // [ (1/w(B_r)) sum |u|^q w ]^{1/q}
    double rhs_gradient = 0.0;  // r [ (1/|B_r|) sum |Du|^2 ]^{1/2}
    double gamma_required = 0.0;
};

SobolevCheck weighted_sobolev_check(const WeightField& f, int t_index,
                                    const std::vector<double>& u_slice, double x0,
                                    double r, double q);

struct LevelSeparation {
    double lhs = 0.0;
    double rhs = 0.0;
};

LevelSeparation level_separation_check(const WeightField& f, int t_index,
                                       const std::vector<double>& v_slice, double x0,
                                       double r, double k, double l, double p,
                                       double beta);

} // namespace dglab

#endif
