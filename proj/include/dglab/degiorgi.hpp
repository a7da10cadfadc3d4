#ifndef DGLAB_DEGIORGI_HPP
#define DGLAB_DEGIORGI_HPP

#include <vector>

#include "dglab/grid.hpp"
#include "dglab/weights.hpp"

namespace dglab {

// Box of node indices (inclusive), the shape cutoffs ramp between.
struct IndexBox {
    int i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
};

// Admissible cutoff: 0 <= zeta <= 1, zeta_t >= 0 (forward difference),
// compact spatial support per slice.
struct Cutoff {
    ScalarField zeta;
    double sup_dzeta = 0.0;  // max |D zeta|
    double sup_zeta_t = 0.0; // max forward-difference zeta_t
    IndexBox inner, outer;
};

// Piecewise-linear ramp: 1 on the inner box, 0 off the outer box in space;
// in time it ramps up from the outer start to the inner start and stays 1.
Cutoff make_cutoff(const Grid& g, const IndexBox& inner, const IndexBox& outer);

enum class TruncationSign { plus, minus };

struct EnergyReport {
    double lhs_energy = 0.0;      // int (u-k)^2 zeta^2 rho at t2
    double lhs_energy_max = 0.0;  // max over t in [t1,t2] (Remark-style variant)
    double lhs_gradient = 0.0;    // iint |D(u-k)|^2 zeta^2
    double rhs_t1 = 0.0;          // int (u-k)^2 zeta^2 rho at t1
    double term_dzeta = 0.0;      // iint (u-k)^2 |D zeta|^2
    double term_zeta_t = 0.0;     // iint (u-k)^2 zeta zeta_t rho
    double term_zeta = 0.0;       // iint (u-k)^2 zeta^2
    double term_level = 0.0;      // k^2 iint_{level set} (zeta^2 + |D zeta|^2)
    double gamma_required = 0.0;
    double gamma_required_max = 0.0; // with the max-over-t left side
};

EnergyReport energy_sides(const Grid& g, const ScalarField& u, const WeightField& weight,
                          const Cutoff& zeta, double k, int t1, int t2,
                          TruncationSign sign, bool include_level_term = true);

struct GiustiResult {
    std::vector<double> sequence;
    bool converged = false;
    double threshold = 0.0; // c^{-1/alpha} b^{-1/alpha^2}
};

// Fast geometric convergence: y_{h+1} = c b^h y_h^{1+alpha}.
GiustiResult giusti_iterate(double y0, double c, double b, double alpha, int max_h);

} // namespace dglab

#endif
