#ifndef DGLAB_HOLDER_HPP
#define DGLAB_HOLDER_HPP

#include <vector>

#include "dglab/grid.hpp"
#include "dglab/weights.hpp"

namespace dglab {

// sup - inf of u over a nonempty node set.
double oscillation(const ScalarField& u, const NodeSet& set);

struct OscillationTrace {
    std::vector<double> radii; // decreasing
    std::vector<double> osc;   // one per radius (may contain zeros)
    double alpha = 0.0;        // log-log slope; +inf sentinel for constant u
    double residual = 0.0;     // max |log osc - fit| over used points
    bool zero_oscillation = false;
};

// Oscillation decay over intrinsic cylinders (waiting times from the weight)
// centered at (x0,t0); at the interface both sides are fitted and the smaller
// exponent is reported.
OscillationTrace holder_fit(const ScalarField& u, const WeightField& f, double x0,
                            double t0, const std::vector<double>& radii);

struct InterfaceProbeResult {
    double x0 = 0.0, t0 = 0.0;
    double alpha = 0.0;
    bool zero_oscillation = false;
    bool pass = false;
};

struct InterfaceExampleReport {
    double jump = 0.0;              // |u(xd, td+) - u(xd, td-)|
    std::vector<double> box_osc;    // oscillation over shrinking boxes at (xd,td)
    bool discontinuity_confirmed = false; // osc stays above 0.9*jump
    std::vector<InterfaceProbeResult> continuity_probes;
    bool pass = false;
};

// Discontinuity/continuity reproduction for the two-region limit solution:
// checks a persistent jump at (x_disc, t_disc) and positive fitted exponents
// at the continuity probes.
InterfaceExampleReport interface_example_check(const ScalarField& u_limit,
                                               const WeightField& f, double x_disc,
                                               double t_disc,
                                               const std::vector<std::pair<double, double>>&
                                                   continuity_probes,
                                               const std::vector<double>& fit_radii,
                                               double alpha_threshold = 0.2);

} // namespace dglab

#endif
