#include "dglab/solver.hpp"

#include <algorithm>
#include <cmath>

extern "C" {
void dgbsv_(const int* n, const int* kl, const int* ku, const int* nrhs, double* ab,
            const int* ldab, int* ipiv, double* b, const int* ldb, int* info);
}

namespace dglab {

namespace {

constexpr double kSnap = 1e-12;

double harmonic(double a1, double a2) {
    double s = a1 + a2;
    return s > 0.0 ? 2.0 * a1 * a2 / s : 0.0;
}

// Thomas algorithm; diagonals overwritten.
void tridiag_solve(std::vector<double>& lo, std::vector<double>& di,
                   std::vector<double>& up, std::vector<double>& rhs) {
    const int n = (int)di.size();
    for (int i = 1; i < n; ++i) {
        if (std::abs(di[i - 1]) < 1e-300)
            throw SingularStep("tridiagonal pivot vanished at row " + std::to_string(i - 1));
        double m = lo[i] / di[i - 1];
        di[i] -= m * up[i - 1];
        rhs[i] -= m * rhs[i - 1];
    }
    if (std::abs(di[n - 1]) < 1e-300)
        throw SingularStep("tridiagonal pivot vanished at last row");
    rhs[n - 1] /= di[n - 1];
    for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - up[i] * rhs[i + 1]) / di[i];
}

ScalarField march(const Grid& g, const EquationCoefficients& coeffs,
                  const std::vector<double>& rho_now,
                  const std::vector<double>& rho_prev_or_same, const BoundaryData& bdata,
                  bool conservative) {
    ScalarField u(g);
    for (int i = 0; i < g.nx; ++i) u.at(i, 0) = bdata.initial(g.x(i));
    std::vector<double> lo(g.nx), di(g.nx), up(g.nx), rhs(g.nx);
    const double dx2 = g.dx * g.dx;
    for (int n = 1; n < g.nt; ++n) {
        const double tn = g.t(n);
        auto rho_at = [&](const std::vector<double>& r, int i, int j) {
            return r[(std::size_t)j * g.nx + i];
        };
        lo[0] = up[0] = 0.0;
        di[0] = 1.0;
        rhs[0] = bdata.left(tn);
        lo[g.nx - 1] = up[g.nx - 1] = 0.0;
        di[g.nx - 1] = 1.0;
        rhs[g.nx - 1] = bdata.right(tn);
        for (int i = 1; i < g.nx - 1; ++i) {
            double aw = harmonic(coeffs.a_at(g, i - 1, n), coeffs.a_at(g, i, n));
            double ae = harmonic(coeffs.a_at(g, i, n), coeffs.a_at(g, i + 1, n));
            double bv = coeffs.b_at(g, i, n);
            double cv = coeffs.c_at(g, i, n);
            double rt = rho_at(rho_now, i, n);
            double rp = conservative ? rho_at(rho_prev_or_same, i, n - 1)
                                     : rho_at(rho_now, i, n);
            lo[i] = -aw / dx2 - bv / (2.0 * g.dx);
            di[i] = rt / g.dt + (aw + ae) / dx2 + cv;
            up[i] = -ae / dx2 + bv / (2.0 * g.dx);
            rhs[i] = rp / g.dt * u.at(i, n - 1);
        }
        std::vector<double> lo2 = lo, di2 = di, up2 = up, r2 = rhs;
        tridiag_solve(lo2, di2, up2, r2);
        for (int i = 0; i < g.nx; ++i) u.at(i, n) = r2[i];
    }
    return u;
}

} // namespace

EquationCoefficients EquationCoefficients::constants(const Grid& g, double av, double bv,
                                                     double cv) {
    if (!(av > 0.0)) throw ConfigError("diffusion coefficient must be positive");
    EquationCoefficients c;
    c.a.assign(g.n_nodes(), av);
    c.b.assign(g.n_nodes(), bv);
    c.c.assign(g.n_nodes(), cv);
    c.lambda = av;
    c.Lambda = av;
    c.M = std::abs(bv);
    c.N = std::abs(cv);
    return c;
}

ScalarField solve_parabolic(const Grid& g, const EquationCoefficients& coeffs,
                            const std::vector<double>& rho, const BoundaryData& bdata,
                            bool conservative) {
    return march(g, coeffs, rho, rho, bdata, conservative);
}

std::vector<ScalarField> solve_elliptic_parabolic(const Grid& g,
                                                  const EquationCoefficients& coeffs,
                                                  const WeightField& weight,
                                                  const std::vector<double>& rho0,
                                                  const BoundaryData& bdata,
                                                  const std::vector<double>& eps_list) {
    for (std::size_t k = 0; k < eps_list.size(); ++k) {
        if (eps_list[k] <= 0.0 || eps_list[k] > 1.0 ||
            (k > 0 && eps_list[k] >= eps_list[k - 1]))
            throw ConfigError("eps list must be strictly decreasing in (0,1]");
    }
    for (int j = 0; j < g.nt; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            Region lab = weight.part.label(i, j);
            double rv = weight.at(i, j);
            if (lab == Region::region1 && !(rv > 0.0))
                throw NonPartitioned("rho must be positive on Q_+");
            if (lab == Region::region2 && rv != 0.0)
                throw NonPartitioned("rho must vanish on Q_0");
        }
    }
    std::vector<ScalarField> family;
    family.reserve(eps_list.size());
    std::vector<double> rho_eps(g.n_nodes());
    for (double eps : eps_list) {
        for (int j = 0; j < g.nt; ++j) {
            for (int i = 0; i < g.nx; ++i) {
                std::size_t k = (std::size_t)j * g.nx + i;
                rho_eps[k] = weight.part.label(i, j) == Region::region2
                                 ? eps * rho0[k]
                                 : weight.at(i, j);
            }
        }
        family.push_back(march(g, coeffs, rho_eps, rho_eps, bdata, false));
    }
    return family;
}

ScalarField solve_forward_backward(const Grid& g, const EquationCoefficients& coeffs,
                                   const WeightField& weight, double eps_strip,
                                   const BoundaryData& bdata, ForwardBackwardInfo* info) {
    // Sign-pattern validation.
    for (int j = 0; j < g.nt; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            Region lab = weight.part.label(i, j);
            double rv = weight.at(i, j);
            if (lab == Region::region1 && !(rv > 0.0))
                throw NonPartitioned("rho must be positive on Q_+");
            if (lab == Region::region2 && !(rv < 0.0))
                throw NonPartitioned("rho must be negative on Q_-");
        }
    }
    // Strip regularization: rho_eps = 0 where dist(x, Gamma(t)) < eps (per slice).
    std::vector<double> rho_eps(g.n_nodes());
    ForwardBackwardInfo local;
    for (int j = 0; j < g.nt; ++j) {
        double xg = weight.part.interface_x(j);
        bool pos_left = false, neg_left = false;
        for (int i = 0; i < g.nx; ++i) {
            std::size_t k = (std::size_t)j * g.nx + i;
            if (std::abs(g.x(i) - xg) < eps_strip - kSnap) {
                rho_eps[k] = 0.0;
                local.strip_nodes++;
                if (j == 0 || j == g.nt - 1) local.boundary_strip_flag = true;
            } else {
                rho_eps[k] = weight.at(i, j);
            }
            if (rho_eps[k] > 0.0) pos_left = true;
            if (rho_eps[k] < 0.0) neg_left = true;
        }
        if (!pos_left || !neg_left)
            throw StripTooWide("Gamma_eps swallows a full region at slice " +
                               std::to_string(j));
    }

    const int nx = g.nx, nt = g.nt;
    const int N = nx * nt;
    const int kl = nx, ku = nx;
    const int ldab = 2 * kl + ku + 1;
    std::vector<double> ab((std::size_t)ldab * N, 0.0);
    std::vector<double> rhs(N, 0.0);
    auto at = [&](int row, int col) -> double& {
        return ab[(std::size_t)col * ldab + (kl + ku + row - col)];
    };
    const double dx2 = g.dx * g.dx;

    for (int j = 0; j < nt; ++j) {
        for (int i = 0; i < nx; ++i) {
            int row = j * nx + i;
            std::size_t k = (std::size_t)j * nx + i;
            double rv = rho_eps[k];
            if (i == 0) {
                at(row, row) = 1.0;
                rhs[row] = bdata.left(g.t(j));
                continue;
            }
            if (i == nx - 1) {
                at(row, row) = 1.0;
                rhs[row] = bdata.right(g.t(j));
                continue;
            }
            if (j == 0 && rv > 0.0) {
                at(row, row) = 1.0;
                rhs[row] = bdata.initial(g.x(i));
                continue;
            }
            if (j == nt - 1 && rv < 0.0) {
                at(row, row) = 1.0;
                rhs[row] = bdata.final_(g.x(i));
                continue;
            }
            double aw = harmonic(coeffs.a_at(g, i - 1, j), coeffs.a_at(g, i, j));
            double ae = harmonic(coeffs.a_at(g, i, j), coeffs.a_at(g, i + 1, j));
            double bv = coeffs.b_at(g, i, j);
            double cv = coeffs.c_at(g, i, j);
            at(row, row - 1) += -aw / dx2 - bv / (2.0 * g.dx);
            at(row, row) += (aw + ae) / dx2 + cv;
            at(row, row + 1) += -ae / dx2 + bv / (2.0 * g.dx);
            if (rv > 0.0) {
                at(row, row) += rv / g.dt;
                at(row, row - nx) += -rv / g.dt;
            } else if (rv < 0.0) {
                at(row, row) += -rv / g.dt;
                at(row, row + nx) += rv / g.dt;
            } else {
                local.elliptic_rows++;
            }
        }
    }

    int n = N, klv = kl, kuv = ku, nrhs = 1, ldb = N, linfo = 0;
    std::vector<int> ipiv(N);
    dgbsv_(&n, &klv, &kuv, &nrhs, ab.data(), &ldab, ipiv.data(), rhs.data(), &ldb,
           &linfo);
    if (linfo != 0)
        throw SingularGlobalSystem("banded LU failed, pivot " + std::to_string(linfo));

    ScalarField u(g);
    u.v = rhs;
    if (info) *info = local;
    return u;
}

double l2_distance(const Grid& g, const ScalarField& u, const ScalarField& v) {
    double s = 0.0;
    for (std::size_t k = 0; k < u.v.size(); ++k) {
        double d = u.v[k] - v.v[k];
        s += d * d;
    }
    return std::sqrt(s * g.dx * g.dt);
}

double h1_distance(const Grid& g, const ScalarField& u, const ScalarField& v) {
    double s = 0.0;
    for (int j = 0; j < g.nt; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            double d = u.at(i, j) - v.at(i, j);
            s += d * d;
            double gu, gv;
            if (i == 0) {
                gu = (u.at(1, j) - u.at(0, j)) / g.dx;
                gv = (v.at(1, j) - v.at(0, j)) / g.dx;
            } else if (i == g.nx - 1) {
                gu = (u.at(i, j) - u.at(i - 1, j)) / g.dx;
                gv = (v.at(i, j) - v.at(i - 1, j)) / g.dx;
            } else {
                gu = (u.at(i + 1, j) - u.at(i - 1, j)) / (2.0 * g.dx);
                gv = (v.at(i + 1, j) - v.at(i - 1, j)) / (2.0 * g.dx);
            }
            double dg = gu - gv;
            s += dg * dg;
        }
    }
    return std::sqrt(s * g.dx * g.dt);
}

ConvergenceReport convergence_report(const Grid& g,
                                     const std::vector<ScalarField>& family,
                                     const std::vector<double>& eps_list,
                                     const std::vector<NodeSet>& target_sets,
                                     double tol) {
    if (family.size() < 3) throw ConfigError("convergence report needs >= 3 members");
    ConvergenceReport rep;
    rep.eps_list = eps_list;
    for (std::size_t k = 0; k + 1 < family.size(); ++k) {
        rep.l2_diff.push_back(l2_distance(g, family[k], family[k + 1]));
        rep.h1_diff.push_back(h1_distance(g, family[k], family[k + 1]));
    }
    for (std::size_t k = 0; k + 1 < rep.l2_diff.size(); ++k)
        if (rep.l2_diff[k + 1] > 1.1 * rep.l2_diff[k] + 1e-15)
            rep.diffs_decreasing = false;

    // Two-stage Richardson extrapolation over the last three members, using
    // the known parameter ratios (eliminates the eps and eps^2 error terms).
    const std::size_t n_f = family.size();
    const ScalarField& u1 = family[n_f - 3];
    const ScalarField& u2 = family[n_f - 2];
    const ScalarField& u3 = family[n_f - 1];
    const double r2 = eps_list[n_f - 2] / eps_list[n_f - 3];
    const double r3 = eps_list[n_f - 1] / eps_list[n_f - 2];
    auto stage1 = [](double a, double b, double r) { return (b - r * a) / (1.0 - r); };
    rep.limit = u3;
    for (std::size_t k = 0; k < rep.limit.v.size(); ++k) {
        double v2 = stage1(u1.v[k], u2.v[k], r2);
        double v3 = stage1(u2.v[k], u3.v[k], r3);
        rep.limit.v[k] = stage1(v2, v3, r2 * r3);
    }

    
    for (const auto& set : target_sets) {
        TargetSetCheck chk;
        if (set.empty()) throw EmptyTargetSet("convergence target set is empty");
        auto set_inf_sup = [&](const ScalarField& f, double& lo, double& hi) {
            lo = 1e300;
            hi = -1e300;
            set.for_each([&](int i, int j) {
                lo = std::min(lo, f.at(i, j));
                hi = std::max(hi, f.at(i, j));
            });
        };
        set_inf_sup(rep.limit, chk.inf_limit, chk.sup_limit);
        for (const auto& f : family) {
            double lo, hi;
            set_inf_sup(f, lo, hi);
            chk.inf_seq.push_back(lo);
            chk.sup_seq.push_back(hi);
        }
        // limsup/liminf of a convergent scalar sequence = its limit; estimate
        // it with the same two-stage elimination as the field.
        auto scalar_limit = [&](const std::vector<double>& s) {
            std::size_t n = s.size();
            double v2 = stage1(s[n - 3], s[n - 2], r2);
            double v3 = stage1(s[n - 2], s[n - 1], r3);
            return stage1(v2, v3, r2 * r3);
        };
        chk.limsup_inf = scalar_limit(chk.inf_seq);
        chk.liminf_sup = scalar_limit(chk.sup_seq);
        chk.inf_check = chk.limsup_inf <= chk.inf_limit + tol;
        chk.sup_check = chk.liminf_sup >= chk.sup_limit - tol;
        rep.target_checks.push_back(chk);
    }
    return rep;
}

} // namespace dglab
