#ifndef DGLAB_SOLVER_HPP
#define DGLAB_SOLVER_HPP

#include <functional>
#include <vector>

#include "dglab/grid.hpp"
#include "dglab/weights.hpp"

namespace dglab {

// Linear equation rho u_t - (a u_x)_x + b u_x + c u = 0 with structure bounds
// lambda <= a <= Lambda, |b| <= M, |c| <= N.
struct EquationCoefficients {
    std::vector<double> a, b, c; // per node
    double lambda = 1.0, Lambda = 1.0, M = 0.0, N = 0.0;

    static EquationCoefficients constants(const Grid& g, double av, double bv, double cv);
    double a_at(const Grid& g, int i, int j) const { return a[(std::size_t)j * g.nx + i]; }
    double b_at(const Grid& g, int i, int j) const { return b[(std::size_t)j * g.nx + i]; }
    double c_at(const Grid& g, int i, int j) const { return c[(std::size_t)j * g.nx + i]; }
};

struct BoundaryData {
    std::function<double(double)> left;    // x = x_lo, function of t
    std::function<double(double)> right;   // x = x_hi, function of t
    std::function<double(double)> initial; // t = 0, function of x
    std::function<double(double)> final_;  // t = T, function of x (forward-backward)
};

// Strictly parabolic regime: backward Euler in time, second-order central in
// space with harmonic face averaging of a; one tridiagonal solve per step.
ScalarField solve_parabolic(const Grid& g, const EquationCoefficients& coeffs,
                            const std::vector<double>& rho, const BoundaryData& bdata,
                            bool conservative = false);

// Elliptic-parabolic regime: for each eps, time-march with
// rho_eps = rho on Q_+ (region 1) and eps*rho0 on Q_0 (region 2).
std::vector<ScalarField> solve_elliptic_parabolic(const Grid& g,
                                                  const EquationCoefficients& coeffs,
                                                  const WeightField& weight,
                                                  const std::vector<double>& rho0,
                                                  const BoundaryData& bdata,
                                                  const std::vector<double>& eps_list);

struct ForwardBackwardInfo {
    int elliptic_rows = 0;          // rows with rho_eps = 0
    int strip_nodes = 0;            // nodes zeroed inside Gamma_eps
    bool boundary_strip_flag = false; // Gamma_eps touched t = 0 or t = T slices
};

// Forward-backward regime: one global banded space-time system; forward
// stencil where rho_eps > 0, backward stencil where rho_eps < 0, per-slice
// elliptic rows where rho_eps = 0; Dirichlet rows on Sigma_eps.
ScalarField solve_forward_backward(const Grid& g, const EquationCoefficients& coeffs,
                                   const WeightField& weight, double eps_strip,
                                   const BoundaryData& bdata,
                                   ForwardBackwardInfo* info = nullptr);

struct TargetSetCheck {
    double inf_limit = 0.0, sup_limit = 0.0;
    std::vector<double> inf_seq, sup_seq;
    double limsup_inf = 0.0, liminf_sup = 0.0; // tail estimates over the family
    bool inf_check = false, sup_check = false;
};

struct ConvergenceReport {
    std::vector<double> eps_list;
    std::vector<double> l2_diff;  // ||u_k - u_{k+1}||_L2, size members-1
    std::vector<double> h1_diff;  // discrete H1 seminorm distances
    ScalarField limit;            // Richardson extrapolation of the last three
    bool diffs_decreasing = true; // with slack factor 1.1
    std::vector<TargetSetCheck> target_checks;
};

ConvergenceReport convergence_report(const Grid& g,
                                     const std::vector<ScalarField>& family,
                                     const std::vector<double>& eps_list,
                                     const std::vector<NodeSet>& target_sets,
                                     double tol = 1e-6);

// L2 / discrete-H1 distances between fields on the same grid.
double l2_distance(const Grid& g, const ScalarField& u, const ScalarField& v);
double h1_distance(const Grid& g, const ScalarField& u, const ScalarField& v);

} // namespace dglab

#endif
