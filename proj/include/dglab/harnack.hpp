#ifndef DGLAB_HARNACK_HPP
#define DGLAB_HARNACK_HPP

#include <string>
#include <vector>

#include "dglab/geometry.hpp"
#include "dglab/grid.hpp"
#include "dglab/weights.hpp"

namespace dglab {

enum class Regime { homogeneous, elliptic_parabolic, forward_backward };

struct HarnackProbe {
    double x0 = 0.0, t0 = 0.0, r = 0.0;
    int j = 0; // 0: derive from the partition label at (x0,t0)
    Regime regime = Regime::homogeneous;
};

// Geometric admissibility: 5r <= R_bar, B_5r(x0) in Omega, the waiting-time
// windows at radius 5r inside (0,T).  Throws ProbeInadmissible naming the
// violated hypothesis.
void validate_probe(const WeightField& f, const HarnackProbe& p, double R_bar);

struct HarnackReport {
    HarnackProbe probe;
    WaitingTimes h_times;
    int j = 1;
    double center_value = 0.0;
    double sup_past = 0.0;     // over B_r(x0) at t0 - r^2 h_past[j]
    double inf_future = 0.0;   // over B_r^j(x0) at t0 + r^2 h_future[j]
    double inf_paraboloid = 0.0;
    double ratio_c = 0.0;      // center / inf_future
    double ratio_hat = 0.0;    // sup_past / inf_future
    double ratio_paraboloid = 0.0;
    double slice_rounding_error = 0.0;
};

HarnackReport harnack_probe(const ScalarField& u, const WeightField& f,
                            const HarnackProbe& probe, double R_bar);

struct ExpansionReport {
    double lambda_measured = 0.0;
    double theta_measured = 0.0;
    double theta_hat_fraction = 0.125; // lower window edge as a fraction of theta
    std::vector<double> theta_grid;
    std::vector<double> lambda_per_theta;
    double sublevel_fraction_max = 0.0; // worst rho_j-fraction of {u < lambda h} in B_4r
    bool wall_flag = false;             // lambda_measured = 0
};

ExpansionReport expansion_check(const ScalarField& u, const WeightField& f, double x0,
                                double t0, double r, double h_level,
                                const std::vector<double>& theta_grid);

struct ShrinkReport {
    double mu_eff = 0.0, omega = 0.0, sigma = 0.0, a = 0.0;
    double fraction_lebesgue = 0.0; // |{u > mu - sigma omega}| fraction on the big set
    double fraction_rho = 0.0;
    double fraction_sum = 0.0;
    double sup_small = 0.0;
    double conclusion_bound = 0.0; // mu - a sigma omega
    bool conclusion_holds = false;
    double nu_flip = 0.0; // +inf when the implication holds for every nu
    bool enlargement_clipped = false;
};

ShrinkReport sublevel_shrink_check(const ScalarField& u, const WeightField& f,
                                   const HarnackProbe& probe, double mu, double omega,
                                   double sigma, double a);

struct RegimeReport {
    HarnackProbe probe;
    std::string case_tag; // "i", "ii", "iii"
    bool excluded = false;
    bool interface_hit = true; // cases ii/iii: paraboloid/ball reached Gamma
    double center = 0.0;
    double sup_lhs = 0.0;  // past/complementary sup side
    double inf_rhs = 0.0;  // future/complementary inf side
    double ratio_sup = 0.0; // sup_lhs / center (interface case: sup_lhs/inf_rhs)
    double ratio_inf = 0.0; // center / inf_rhs
    double x1 = 0.0, t1 = 0.0, rho_bar = 0.0;
    double slice_rounding_error = 0.0;
};

std::vector<RegimeReport> regime_harnack(const ScalarField& u, const WeightField& f,
                                         const std::vector<HarnackProbe>& probes,
                                         Regime regime, double R_bar,
                                         const std::vector<int>& excluded_slices = {});

} // namespace dglab

#endif
